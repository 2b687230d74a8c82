// Copyright (c) 2026 The chainecon developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <chainecon/amount.hpp>
#include <chainecon/attack.hpp>
#include <chainecon/calibration.hpp>
#include <chainecon/chain_race.hpp>
#include <chainecon/distribution.hpp>
#include <chainecon/io.hpp>
#include <chainecon/rng.hpp>
#include <chainecon/supply.hpp>
#include <chainecon/version.hpp>
