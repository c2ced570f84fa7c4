#pragma once

#include "obk/braid.hpp"
#include "obk/document.hpp"
#include "obk/error.hpp"
#include "obk/integer.hpp"
#include "obk/invariants.hpp"
#include "obk/openbook.hpp"
#include "obk/page.hpp"
#include "obk/smith.hpp"
#include "obk/suites.hpp"
#include "obk/twist.hpp"
