#ifndef GRADSTAR_JORDAN_COMPLEX_HPP
#define GRADSTAR_JORDAN_COMPLEX_HPP

#include <string>
#include <vector>

#include "gradstar/matrix.hpp"
#include "gradstar/mupoly.hpp"
#include "gradstar/poly.hpp"

namespace gradstar {

// One eigenvalue with its Jordan block sizes (actual sizes, weakly
// decreasing; size n+1 corresponds to nilpotency parameter n).
struct EigenBlocks {
    Scalar lambda;
    std::vector<size_t> block_sizes;
};

// Jordan-form specification: the caller supplies exact eigenvalues and block
// sizes; computing a Jordan form of an arbitrary matrix is out of scope.
struct JordanSpecC {
    Field field = Field::Complex;
    std::vector<EigenBlocks> eigenvalues;

    void validate() const;
    size_t dimension() const;
    /// Canonical names x{k}_{b}_{j}, flattened in block-major order.
    std::vector<std::string> var_names() const;
    /// nu_k for one eigenvalue: number of its blocks of size >= k+1.
    size_t nu(size_t eigen_index, size_t k) const;
};

struct BuiltSystem {
    Matrix m;                        // Jordan form
    Matrix u;                        // blockwise M - lambda I (nilpotent)
    std::vector<std::string> vars;   // canonical naming
};

BuiltSystem build_matrices(const JordanSpecC& spec);

struct SolutionPair {
    Poly f, g;
};

enum class ShiftDirection { Forward, Inverse };

/// Forward: (f, g) -> (f - lambda g, g).  Inverse: (h, g) -> (h + lambda g, g).
SolutionPair eigen_shift(const Poly& f, const Poly& g, const Scalar& lambda,
                         ShiftDirection direction);

/// Exact componentwise check grad f == M grad g.
bool verify_gradient(const Matrix& m, const Poly& f, const Poly& g);

/// Lifts a solution of grad f = U grad g (U nilpotent) to the mu-vector of
/// the extended system (X = -U, Z = mu^r), r the nilpotency index of U.
/// Slots r-2 and r-1 hold f and g verbatim; lower slots are integrated with
/// value 0 at the origin.
MuPoly extend_nilpotent(const Matrix& u, const Poly& f, const Poly& g);

// Arbitrary generating functions phi_0..phi_{n1} of the general solution;
// phi_k is a polynomial in exactly nu_k variables named s1, s2, ...
using GenFuncSet = std::vector<Poly>;

std::vector<std::string> gen_func_vars(size_t arity);

/// Coefficients in mu of p(s -> images), where each image is a mu-polynomial
/// given by its coefficient list over a common variable set.
std::vector<Poly> mu_expand(const Poly& p, const std::vector<std::vector<Poly>>& images);

/// The Jodeit--Olver general solution for a single-eigenvalue spec: the pair
/// built from the mu-derivatives of phi_k at 0 (arbitrary constant fixed to 0).
SolutionPair general_solution(const JordanSpecC& spec, const GenFuncSet& phis);

/// Sum of per-eigenvalue general solutions for a multi-eigenvalue spec.
SolutionPair general_solution_multi(const JordanSpecC& spec,
                                    const std::vector<GenFuncSet>& phis);

/// Coefficient of mu^j in the i-th power of x_0 + x_1 mu + ... + x_n mu^n,
/// by direct multinomial expansion.  block_vars lists x_0..x_n; the result
/// is expressed over ambient_vars.
Poly power_coefficient(long i, long j, const std::vector<std::string>& block_vars,
                       const std::vector<std::string>& ambient_vars, Field field);

/// Same coefficient through the partial-Bell-polynomial formula
/// sum_s C(i,s) x_0^(i-s) B_{j,s}(x_1, 2 x_2, ..., (j-s+1)! x_{j-s+1}).
Poly power_coefficient_bell(long i, long j, const std::vector<std::string>& block_vars,
                            const std::vector<std::string>& ambient_vars, Field field);

/// Multi-index version: convolution over the first I.size() blocks of a
/// single-eigenvalue spec; requires 0 <= j <= n_r with r = I.size().
Poly power_coefficient_multi(const std::vector<long>& index, long j, const JordanSpecC& spec);

/// The nested-embedding star power of the block linear forms for a
/// multi-index, a mu-vector of the full system (modulus mu^(n1+1)).
MuPoly nested_star_power(const JordanSpecC& spec, const std::vector<long>& index);

/// Series form of the general solution: sum over monomials of the phi's of
/// constant-solution coefficients times nested star powers.  The top
/// coefficient equals g and the next one equals h = f - lambda g, exactly.
MuPoly reconstruct_star_series(const JordanSpecC& spec, const GenFuncSet& phis);

/// Splits a solution by eigenvalue through monomial variable support.
/// Constants go to the first component.  A monomial mixing variables of two
/// eigenvalues signals corrupted input and raises std::invalid_argument.
std::vector<SolutionPair> decompose_by_eigenvalue(const JordanSpecC& spec, const Poly& f,
                                                  const Poly& g);

/// The extended nilpotent system (X = -U, Z = mu^(n1+1)) of a
/// single-eigenvalue spec.
StarSystem nilpotent_system(const JordanSpecC& spec);

}  // namespace gradstar

#endif
