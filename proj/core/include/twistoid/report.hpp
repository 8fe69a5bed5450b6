#ifndef TWISTOID_REPORT_HPP
#define TWISTOID_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "twistoid/classifier.hpp"
#include "twistoid/covers.hpp"
#include "twistoid/flag_complex.hpp"
#include "twistoid/params.hpp"

namespace twistoid {

/// One classified twistoid, ready for serialization.  Field order and
/// formatting are stable across runs: sorted keys are fixed by construction
/// and no value is ever a float.
struct OutputRecord {
    ClassificationReport classification;
    std::optional<CoverLattice> cover;
    std::optional<ToroidClass> coverClass;
    std::optional<VerificationReport> oracle;
    std::optional<long long> petrieM;                 // tricosm only
    std::optional<std::string> petrieHandedness;      // tricosm only
};

OutputRecord make_record(const TwistoidParams& params, bool withCover, bool withOracle,
                         long long flagBound = kDefaultFlagBound);

std::string to_json(const OutputRecord& r);
std::string to_csv_header();
std::string to_csv_row(const OutputRecord& r);
std::string to_text(const OutputRecord& r);

/// Parse the params object of an emitted JSON record back into parameters.
TwistoidParams params_from_json(const std::string& json);

/// CSV of the eleven twist conjugacy classes, regenerated from
/// classify_twist_type over the canonical representatives.
std::string table1_csv();

/// CSV of the 5x5 dicosm-axial family grid: 18 filled cells, 7 "None".
std::string table2_csv();

/// CSV of all 29 families (18 + 4 + 3 + 4) with symbolic orbit formulas.
std::string families_csv();

}  // namespace twistoid

#endif
