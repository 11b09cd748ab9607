#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "lab5/errors.hpp"

namespace lab5 {

/// An element of the integral group ring of Z/r, stored as the coefficient
/// vector indexed by group element: coeffs()[g] is the coefficient of g.
/// The standard involution reverses group indices (g -> -g); the
/// augmentation sums all coefficients; pc extracts the identity coefficient.
class GroupRingElement {
public:
    explicit GroupRingElement(std::int64_t r); // zero element
    GroupRingElement(std::int64_t r, std::vector<std::int64_t> coeffs);

    /// coeff * g^power
    static GroupRingElement basis(std::int64_t r, std::int64_t power, std::int64_t coeff = 1);

    std::int64_t modulus() const { return r_; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }
    std::int64_t coeff(std::int64_t g) const;

    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement operator-(const GroupRingElement& o) const;
    GroupRingElement operator-() const;
    GroupRingElement operator*(const GroupRingElement& o) const; // convolution

    GroupRingElement involute() const;
    std::int64_t augment() const;
    std::int64_t pc() const;

    /// Character value chi_j(x) = sum_g c_g zeta^{j g}, zeta = exp(2 pi i / r).
    std::complex<double> character(std::int64_t j) const;

    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

private:
    std::int64_t r_;
    std::vector<std::int64_t> c_;
};

/// A d x d matrix over the group ring.
class LambdaMatrix {
public:
    LambdaMatrix(std::int64_t r, int d); // zero matrix

    std::int64_t modulus() const { return r_; }
    int rank() const { return d_; }

    GroupRingElement& at(int i, int j);
    const GroupRingElement& at(int i, int j) const;

    friend bool operator==(const LambdaMatrix&, const LambdaMatrix&) = default;

private:
    std::int64_t r_;
    int d_;
    std::vector<GroupRingElement> e_;
};

/// conjugate-transpose(M) = -M, where conjugation is the involution.
bool is_skew_hermitian(const LambdaMatrix& M);

/// Every character pushforward chi_j(M) is invertible: |det| above the
/// tolerance 1e-9 * max(1, ||chi_j(M)||_F)^d.
bool is_nondegenerate(const LambdaMatrix& M);

/// Block sum of n standard blocks [[0, e], [-e, 0]]; rank 2n.
LambdaMatrix hyperbolic(int n, std::int64_t r);

LambdaMatrix direct_sum(const LambdaMatrix& A, const LambdaMatrix& B);

/// The multisignature as a character: one integer sigma_j per character j,
/// with evaluation MS(g) = sum_j sigma_j * zeta^{j g}.
///
/// For skew forms the values are purely imaginary, sigma_0 = 0 and
/// sigma_{r-j} = -sigma_j. Context, not asserted here: forms arising from
/// surgery obstructions additionally evaluate to characters vanishing at the
/// identity and divisible by four.
struct Multisignature {
    std::int64_t r = 1;
    std::vector<std::int64_t> sigma;

    std::complex<double> value_at(std::int64_t g) const;
    std::vector<std::complex<double>> values() const;

    friend bool operator==(const Multisignature&, const Multisignature&) = default;
};

/// Definitional route: complexify the integer form p_c(lambda) on the rank
/// r*d lattice, split into the +-i eigenspaces of the form's operator, and
/// take the difference of the group-action characters on the two halves.
/// Throws degenerate_form_error when an eigenvalue sits inside the tolerance
/// band, and precondition_error when M is not skew-hermitian.
Multisignature multisignature(const LambdaMatrix& M);

/// Same computation carried out with an arbitrary positive-definite hermitian
/// inner product (given row-major, dimension r*d), which is averaged over the
/// group action first. The result must not depend on the product.
Multisignature multisignature_with_product(const LambdaMatrix& M,
                                           const std::vector<std::complex<double>>& product);

/// Independent per-character route: sigma_j is the eigenvalue-count signature
/// of the hermitian matrix i * chi_j(M). Must agree with the definitional
/// route exactly.
Multisignature multisignature_characters(const LambdaMatrix& M);

/// A quadratic refinement on a symplectic space over the field with two
/// elements, presented by an ambient alternating Gram matrix, a symplectic
/// basis (a_1..a_n, b_1..b_n) in ambient coordinates, and the refinement's
/// values on the ambient basis vectors. The refinement extends by
/// q(x + y) = q(x) + q(y) + x.y.
class Z2QuadraticForm {
public:
    Z2QuadraticForm(std::vector<std::vector<int>> gram,
                    std::vector<std::vector<int>> basis,
                    std::vector<int> mu); // throws if the basis is not symplectic

    int pairs() const { return n_; }
    int dimension() const { return static_cast<int>(gram_.size()); }

    int bilinear(const std::vector<int>& x, const std::vector<int>& y) const;
    int q(const std::vector<int>& v) const;

    const std::vector<int>& basis_a(int i) const { return basis_[i]; }
    const std::vector<int>& basis_b(int i) const { return basis_[n_ + i]; }

private:
    int n_;
    std::vector<std::vector<int>> gram_;
    std::vector<std::vector<int>> basis_;
    std::vector<int> mu_;
};

/// sum_i q(a_i) q(b_i) mod 2.
int arf(const Z2QuadraticForm& form);

/// Push a skew-hermitian matrix down to the integers by augmentation, reduce
/// mod 2, extract a symplectic basis, and attach the refinement values given
/// on the lattice basis. Throws degenerate_form_error when the mod-2 form has
/// a radical.
Z2QuadraticForm augment_form(const LambdaMatrix& M, const std::vector<int>& mu_values);

} // namespace lab5
