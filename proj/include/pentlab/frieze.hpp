#pragma once

#include "pentlab/lower1d.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pentlab {

// Rows A_0, A_1, ... of n points each. Entry j of an even row sits in column 2j+2,
// entry j of an odd row in column 2j+1 (columns 1..2n, cyclic).
struct FriezePattern {
    int n = 0;
    std::vector<Tuple1> rows;

    // Column (1..2n) of entry j in row i.
    static int column(int row, int j) { return row % 2 == 0 ? 2 * j + 2 : 2 * j + 1; }
};

// The row after `current`, given the row above it; `parity` is the parity of the new row.
Tuple1 next_row(const Tuple1& above, const Tuple1& current, int parity);

// A_0 = (inf, ..., inf), rows through A_{2n}.
FriezePattern build_pattern(const Tuple1& a1);

struct DiamondReport {
    int checked = 0;
    int failures = 0;
    int limit_cells = 0;  // 0/0 on resubstitution, checked against the affine closed form instead
    bool ok() const { return checked > 0 && failures == 0; }
};

// Resubstitutes [top, left, bottom, right] = -1 for every generated cell.
DiamondReport verify_diamonds(const FriezePattern& p);

struct T005Report {
    FriezePattern pattern;
    ProjPoint mean;
    bool penultimate_constant = false;  // A_{2n-1}
    bool last_constant = false;         // A_{2n}
    bool shift_identity = false;        // X_{(2n-1,k)} = X_{(2n,k+1)}
    bool matches_mean = false;
    bool sums_agree = false;            // sum A_1 = sum A_2
    DiamondReport diamonds;

    bool ok() const
    {
        return penultimate_constant && last_constant && shift_identity && matches_mean && sums_agree &&
               diamonds.ok();
    }
};

T005Report verify_T005(const Tuple1& a1);

struct EmbeddingReport {
    FriezePattern pattern;
    // Row i for which T_1(A_{i-2}, A_i) = (A_i, A_{i+2}) was checked, and the outcome.
    std::vector<std::pair<int, bool>> even_relations;
    std::vector<std::pair<int, bool>> odd_relations;  // i = 1 uses A_{-1} = inf

    bool ok() const;
};

EmbeddingReport verify_embedding(const Tuple1& a1);

struct ClosedFormReport {
    int trials = 0;
    int skipped = 0;           // degenerate random draws
    int w2_x3_reading = 0;     // matches with X_2 read as X_3
    int w2_y2_reading = 0;     // matches with X_2 read as Y_2
    int six_point = 0;         // [inf, Y_2, Y_0, W_2, Y_2, Y_4] = -1
    int y_equals_y_prime = 0;  // T_1 value = diamond value = closed form

    bool ok() const { return trials > 0 && six_point == trials && y_equals_y_prime == trials; }
};

ClosedFormReport closed_form_oracles(std::uint64_t seed, int trials, std::int64_t range = 40);

// Staggered text table, one line per row.
std::string render_table(const FriezePattern& p);

Tuple1 random_a1(int n, std::uint64_t seed, std::int64_t range);

}  // namespace pentlab
