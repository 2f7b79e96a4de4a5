#ifndef QUANTALIB_QUANTALIB_HPP
#define QUANTALIB_QUANTALIB_HPP

#include "quantalib/bitset.hpp"
#include "quantalib/completion.hpp"
#include "quantalib/constructions.hpp"
#include "quantalib/corpus.hpp"
#include "quantalib/error.hpp"
#include "quantalib/generators.hpp"
#include "quantalib/grothendieck.hpp"
#include "quantalib/groupoid.hpp"
#include "quantalib/io.hpp"
#include "quantalib/iso.hpp"
#include "quantalib/lattice.hpp"
#include "quantalib/oracle.hpp"
#include "quantalib/predicates.hpp"
#include "quantalib/qcat.hpp"
#include "quantalib/quantaloid.hpp"
#include "quantalib/replay.hpp"
#include "quantalib/report.hpp"
#include "quantalib/sites.hpp"
#include "quantalib/split.hpp"
#include "quantalib/verify.hpp"

#endif
