// The three censuses over the shipped catalog (perpendicular, orthogonal
// with rank-1 intersection, skew), the exotic-pair report built from them,
// and deterministic CSV / JSON / text emission.
#pragma once

#include "g2census/invariants.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace g2census {

struct CensusRow {
    std::string plus_id, minus_id;
    int order_plus = 0, order_minus = 0;  // catalog-order sort keys
    std::string match_class;              // perpendicular | orthogonal | skew
    std::optional<Int> A_sq_plus, A_sq_minus, B_sq;
    TcsTopology top;
    std::string status;  // ok | arithmetic_candidate_only | mu_nonzero_verified
    std::string notes;
    std::string h_plus_display, h_minus_display;  // display-only, never used in logic
};

struct Histogram {
    std::map<std::pair<Int, Int>, int> cells;  // (b3, d) -> count
    int total() const;
};

struct PerpCensus {
    std::vector<CensusRow> rows;
    Histogram hist;
    std::map<Int, int> d_totals;
    int distinct_manifolds = 0;  // distinct (b3, d) pairs
    int distinct_b3 = 0;
};
PerpCensus census_perp(const Catalog& cat);

struct OrthCensus {
    std::vector<CensusRow> rows;  // one per shared-complement success
};
OrthCensus census_orth(const Catalog& cat);

// Divisibility screen for a non-zero smooth invariant: ample records with
// 8 | c2.A whose entry's c2 is not divisible by 4, then pair feasibility
// (Delta+ Delta- > A+^2 A-^2 against some screened partner).
struct MuScreen {
    std::vector<std::pair<int, Int>> divisibility_hits;  // (mm, A_sq)
    std::vector<int> feasible_families;                  // mm numbers that survive
};
MuScreen mu_candidate_screen(const Catalog& cat);

struct SkewCensus {
    std::vector<CensusRow> rows;
    MuScreen screen;
};
SkewCensus census_skew(const Catalog& cat, bool mu_filter);

struct ExoticType {
    Int b3, d, mu;
    int perp_partner_count = 0;  // perpendicular census count at (b3, d)
};
struct ExoticReport {
    std::vector<ExoticType> types;               // distinct diffeo types with mu != 0
    std::vector<std::pair<Int, Int>> homeo_pairs;  // (b3, d) with both mu = 0 and mu != 0
};
ExoticReport exotic_report(const Catalog& cat);

// Fixed column order and sort order; byte-identical across runs.
std::string rows_to_csv(const std::vector<CensusRow>& rows);
std::string rows_to_json(const std::vector<CensusRow>& rows);

std::string perp_text(const PerpCensus& c);
std::string orth_text(const OrthCensus& c);
std::string skew_text(const SkewCensus& c);
std::string exotic_text(const ExoticReport& r);
std::string exotic_json(const ExoticReport& r);

}  // namespace g2census
