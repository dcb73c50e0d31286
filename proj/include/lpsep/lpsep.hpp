#pragma once

#include "lpsep/errors.hpp"
#include "lpsep/linalg.hpp"
#include "lpsep/quantum.hpp"
#include "lpsep/measures.hpp"
#include "lpsep/criteria.hpp"
#include "lpsep/families.hpp"
#include "lpsep/random.hpp"
#include "lpsep/oracle.hpp"
#include "lpsep/io.hpp"
#include "lpsep/cli.hpp"
