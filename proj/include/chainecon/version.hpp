// Copyright (c) 2026 The chainecon developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

namespace chainecon {

inline constexpr const char* VERSION = "0.1.0";

} // namespace chainecon
