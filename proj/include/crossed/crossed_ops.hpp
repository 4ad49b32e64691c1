#pragma once

#include "braid.hpp"
#include "cli.hpp"
#include "crossed.hpp"
#include "embed.hpp"
#include "finite_group.hpp"
#include "homology.hpp"
#include "interval.hpp"
#include "operad.hpp"
#include "operadic.hpp"
#include "parallel.hpp"
#include "perm.hpp"
#include "report.hpp"
