#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "motdec/errors.hpp"
#include "motdec/weights.hpp"

namespace motdec {

/// Sparse integer Laurent polynomial in `rank` torus variables. Zero
/// coefficients are never stored. Carrier for all character arithmetic.
class LaurentCharacter {
public:
    using Exponent = std::vector<int>;
    using TermMap = std::map<Exponent, mpz_class>;

    static constexpr int kMaxRank = 4;

    explicit LaurentCharacter(int rank);
    static LaurentCharacter one(int rank);
    static LaurentCharacter monomial(Exponent e, mpz_class coeff = 1);

    int rank() const { return rank_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    mpz_class coefficient(const Exponent& e) const;

    void add_term(const Exponent& e, const mpz_class& c);

    LaurentCharacter& operator+=(const LaurentCharacter& o);
    LaurentCharacter& operator-=(const LaurentCharacter& o);
    LaurentCharacter operator+(const LaurentCharacter& o) const;
    LaurentCharacter operator-(const LaurentCharacter& o) const;
    LaurentCharacter operator*(const LaurentCharacter& o) const;
    LaurentCharacter operator*(const mpz_class& c) const;
    bool operator==(const LaurentCharacter& o) const = default;

    /// Evaluation at all variables = 1 (the dimension of a character).
    mpz_class eval_ones() const;

    /// Exact division; throws InternalError when the division is not exact.
    LaurentCharacter divide_exact(const LaurentCharacter& divisor) const;

    /// Tensor with a character in disjoint variables (exponents concatenate).
    LaurentCharacter outer_product(const LaurentCharacter& o) const;

    bool has_nonnegative_coefficients() const;

private:
    int rank_;
    TermMap terms_;
};

struct GLIrrepLabel {
    WeightTuple lambda;
};

/// Irreducible sp4 representation with highest weight a*w1 + b*w2 (short and
/// long fundamental weights).
struct SpFourIrrepLabel {
    int a = 0;
    int b = 0;
};

/// Character of the irreducible GL_d representation with highest weight
/// lambda, in variables x_1..x_d. Negative tails are handled through a
/// determinant twist.
LaurentCharacter schur_character(const WeightTuple& lambda, int d);

/// Weyl dimension formula for GL_d.
mpz_class gl_dimension(const WeightTuple& lambda, int d);

/// Weyl character formula for type C2, variables x1, x2 in the L-basis.
LaurentCharacter sp4_character(const SpFourIrrepLabel& label);

/// Closed form (a+1)(b+1)(a+b+2)(a+2b+3)/6.
mpz_class sp4_dimension(const SpFourIrrepLabel& label);

/// Character of the i-th exterior power of a genuine character.
LaurentCharacter exterior_power_character(const LaurentCharacter& base, int i);

/// All exterior powers 0..dim at once (elementary-symmetric recursion).
std::vector<LaurentCharacter> exterior_powers_all(const LaurentCharacter& base);

/// Decomposition into GL_d irreducibles by highest-weight peeling; throws
/// VerificationError when the input is not a genuine character.
std::map<WeightTuple, mpz_class> decompose_gl(const LaurentCharacter& chi, int d);

/// Restriction of an sp4 irreducible to the Levi gl2 along the shared
/// maximal torus, decomposed into gl2 irreducibles.
std::map<WeightTuple, mpz_class> branch_sp4_to_gl2(const SpFourIrrepLabel& label);

struct DLambda {
    bool known = false;
    int value = 1;
};

/// The splitting integer d(lambda): 1 for split algebras, the parity rule for
/// indefinite quaternions, unknown otherwise (unless overridden).
DLambda d_lambda(const WeightTuple& lambda, const SimpleFactorDescriptor& factor);

} // namespace motdec
