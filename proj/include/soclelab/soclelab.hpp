#pragma once

#include "soclelab/bitvec.hpp"
#include "soclelab/caps.hpp"
#include "soclelab/corpus.hpp"
#include "soclelab/error.hpp"
#include "soclelab/ideals.hpp"
#include "soclelab/incidence.hpp"
#include "soclelab/json_io.hpp"
#include "soclelab/poset.hpp"
#include "soclelab/ring.hpp"
#include "soclelab/ring_spec.hpp"
#include "soclelab/theorems.hpp"
