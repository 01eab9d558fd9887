#pragma once

#include "dfaint/amplify.hpp"
#include "dfaint/bench.hpp"
#include "dfaint/corpus.hpp"
#include "dfaint/decode.hpp"
#include "dfaint/dfa.hpp"
#include "dfaint/error.hpp"
#include "dfaint/io/csv.hpp"
#include "dfaint/io/dfa_format.hpp"
#include "dfaint/io/instance_format.hpp"
#include "dfaint/io/metadata.hpp"
#include "dfaint/io/ntm_format.hpp"
#include "dfaint/ntm.hpp"
#include "dfaint/oracle.hpp"
#include "dfaint/product.hpp"
#include "dfaint/reductions.hpp"
#include "dfaint/savitch.hpp"
#include "dfaint/solver.hpp"
#include "dfaint/trace.hpp"
#include "dfaint/verify.hpp"
