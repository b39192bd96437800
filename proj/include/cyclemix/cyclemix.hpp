#pragma once

#include "cyclemix/partition.hpp"
#include "cyclemix/characters.hpp"
#include "cyclemix/abacus.hpp"
#include "cyclemix/mn_bratteli.hpp"
#include "cyclemix/symfunc.hpp"
#include "cyclemix/walk.hpp"
#include "cyclemix/oracle.hpp"
#include "cyclemix/sim.hpp"
#include "cyclemix/verify.hpp"
