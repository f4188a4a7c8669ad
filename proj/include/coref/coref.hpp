#pragma once

// Umbrella header: equivalence-class coreference scoring (link recall and
// precision) plus chance-corrected agreement (Cohen's kappa, Krippendorff's
// alpha) over the same partitions.

#include "coref/agreement.hpp"
#include "coref/annotation.hpp"
#include "coref/errors.hpp"
#include "coref/link_table.hpp"
#include "coref/muc.hpp"
#include "coref/partition.hpp"
#include "coref/ratio.hpp"
#include "coref/report.hpp"
