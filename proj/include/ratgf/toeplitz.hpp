/*
   Copyright 2026 The ratgf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#ifndef RATGF_TOEPLITZ_HPP
#define RATGF_TOEPLITZ_HPP

#include <ratgf/errors.hpp>
#include <ratgf/matrix.hpp>
#include <ratgf/rational_function.hpp>

#include <cstddef>
#include <vector>

namespace ratgf {

enum class ToeplitzMode { det, perm };

/*
 * A family of banded Toeplitz matrices: row[j] sits on diagonal +j and
 * col[i] on diagonal -i, everything outside the band is zero. row[0] and
 * col[0] both name the main diagonal and must agree.
 */
struct ToeplitzFamily {
    std::vector<Rational> row;
    std::vector<Rational> col;

    std::size_t k1() const { return row.size(); }
    std::size_t k2() const { return col.size(); }
    /// Entry on diagonal `offset` (column minus row).
    Rational entry(long offset) const;
    /// Throws InconsistentSpec unless both prefixes are nonempty and agree on the diagonal.
    void validate() const;
};

struct ToeplitzSpec {
    std::size_t n = 0;
    ToeplitzFamily family;
};

Matrix<Rational> matrix_from_spec(const ToeplitzSpec& spec);
inline Matrix<Rational> matrix_from_spec(std::size_t n, const ToeplitzFamily& f) { return matrix_from_spec({n, f}); }

/// Permanent by Ryser's inclusion-exclusion. Exponential; n <= 20.
Rational permanent_ryser(const Matrix<Rational>& a);

enum class SequenceMethod { direct, transfer };

/*
 * f(A_1), ..., f(A_N). direct: Bareiss for det, Ryser for perm (N <= 20,
 * else BudgetExceeded); transfer: series of gf_transfer.
 */
std::vector<Rational> value_sequence(const ToeplitzFamily& f, ToeplitzMode mode, std::size_t count,
                                     SequenceMethod method = SequenceMethod::direct);

/*
 * Generating function 1 + sum_{i>=1} f(A_i) t^i guessed from the terms
 * with index m..n. The numerator is D * (1 + sum_{i<=n} f(A_i) t^i) cut at
 * degree deg(D) + m - 1 (the recurrence is only known to hold from index
 * m + deg(D) on), and the result must reproduce all n terms; NoFit otherwise.
 */
RationalFunction gf_family_guess(const ToeplitzFamily& f, ToeplitzMode mode, std::size_t m, std::size_t n);

/*
 * A minor met during repeated first-row expansion. offsets holds, in
 * increasing order, the diagonals (relative to the minor's first row) of
 * its first k1 columns; every later column continues the main band. The
 * largest offset is always k1 - 1.
 */
struct MinorState {
    std::vector<long> offsets;

    /// Offsets of the minor's first row / first column entries.
    std::vector<long> row_offsets() const { return offsets; }
    std::vector<long> col_offsets(const ToeplitzFamily& f) const;
    /// The same as values, cut after the last nonzero entry.
    std::vector<Rational> row_values(const ToeplitzFamily& f) const;
    std::vector<Rational> col_values(const ToeplitzFamily& f) const;

    friend bool operator==(const MinorState&, const MinorState&) = default;
    friend auto operator<=>(const MinorState&, const MinorState&) = default;
};

MinorState root_state(const ToeplitzFamily& f);

/// The m x m minor a state stands for (m >= k1). Dead children are accepted.
Matrix<Rational> minor_matrix(const ToeplitzFamily& f, const MinorState& s, std::size_t m);

struct Expansion {
    Rational coeff;        // entry times the cofactor sign
    std::size_t position;  // 1-based column in the minor's first row
    MinorState child;
    bool dead;  // child has an all-zero first column
};

/// One step of first-row expansion; zero entries are skipped. Throws BadState.
std::vector<Expansion> expand_minor(const ToeplitzFamily& f, const MinorState& s, ToeplitzMode mode);

struct Transition {
    Rational coeff;
    std::size_t target;
    std::size_t position;
};

struct TransferScheme {
    ToeplitzFamily family;
    ToeplitzMode mode = ToeplitzMode::det;
    std::vector<MinorState> states;  // root first, then discovery order
    std::vector<std::vector<Transition>> transitions;
};

/// Closure of expand_minor from the root with dead children dropped.
/// Throws SchemeExplosion past 10 * 2^(k1+k2) states.
TransferScheme children_scheme(const ToeplitzFamily& f, ToeplitzMode mode = ToeplitzMode::det);

/// Solves X_root = 1 + t * sum c X_child, X_i = t * sum c X_child, over Q(t).
RationalFunction gf_transfer(const TransferScheme& scheme);
RationalFunction gf_transfer(const ToeplitzFamily& f, ToeplitzMode mode);

}  // namespace ratgf

#endif  // RATGF_TOEPLITZ_HPP
