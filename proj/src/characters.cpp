#include "motdec/characters.hpp"

#include <algorithm>
#include <numeric>

namespace motdec {

LaurentCharacter::LaurentCharacter(int rank) : rank_(rank) {
    if (rank < 0 || rank > kMaxRank + 4)
        throw ResourceLimitError("character rank outside the supported range");
}

LaurentCharacter LaurentCharacter::one(int rank) {
    LaurentCharacter c(rank);
    c.terms_[Exponent(rank, 0)] = 1;
    return c;
}

LaurentCharacter LaurentCharacter::monomial(Exponent e, mpz_class coeff) {
    LaurentCharacter c(static_cast<int>(e.size()));
    if (coeff != 0) c.terms_[std::move(e)] = std::move(coeff);
    return c;
}

mpz_class LaurentCharacter::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentCharacter::add_term(const Exponent& e, const mpz_class& c) {
    if (static_cast<int>(e.size()) != rank_)
        throw InternalError("exponent rank mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentCharacter& LaurentCharacter::operator+=(const LaurentCharacter& o) {
    if (o.rank_ != rank_) throw InternalError("character rank mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentCharacter& LaurentCharacter::operator-=(const LaurentCharacter& o) {
    if (o.rank_ != rank_) throw InternalError("character rank mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentCharacter LaurentCharacter::operator+(const LaurentCharacter& o) const {
    LaurentCharacter r = *this;
    r += o;
    return r;
}

LaurentCharacter LaurentCharacter::operator-(const LaurentCharacter& o) const {
    LaurentCharacter r = *this;
    r -= o;
    return r;
}

LaurentCharacter LaurentCharacter::operator*(const LaurentCharacter& o) const {
    if (o.rank_ != rank_) throw InternalError("character rank mismatch");
    LaurentCharacter r(rank_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponent e(rank_);
            for (int i = 0; i < rank_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

LaurentCharacter LaurentCharacter::operator*(const mpz_class& c) const {
    LaurentCharacter r(rank_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

mpz_class LaurentCharacter::eval_ones() const {
    mpz_class s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentCharacter LaurentCharacter::divide_exact(const LaurentCharacter& divisor) const {
    if (divisor.rank_ != rank_) throw InternalError("character rank mismatch");
    if (divisor.is_zero()) throw InternalError("division by the zero character");

    // Reduce against the lex-leading term of the divisor. The alternants used
    // here have leading coefficient +-1, so quotients stay integral.
    const auto lead = std::prev(divisor.terms_.end());
    const Exponent& lead_e = lead->first;
    const mpz_class& lead_c = lead->second;

    LaurentCharacter quotient(rank_);
    LaurentCharacter rem = *this;
    size_t guard = 0;
    const size_t max_steps = 4000000;
    while (!rem.is_zero()) {
        if (++guard > max_steps) throw InternalError("laurent division does not terminate");
        const auto top = std::prev(rem.terms_.end());
        mpz_class q = top->second / lead_c;
        if (q * lead_c != top->second)
            throw InternalError("laurent division is not exact (coefficient)");
        Exponent shift(rank_);
        for (int i = 0; i < rank_; ++i) shift[i] = top->first[i] - lead_e[i];
        LaurentCharacter qterm = monomial(shift, q);
        quotient += qterm;
        rem -= qterm * divisor;
    }
    return quotient;
}

LaurentCharacter LaurentCharacter::outer_product(const LaurentCharacter& o) const {
    LaurentCharacter r(rank_ + o.rank_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponent e = e1;
            e.insert(e.end(), e2.begin(), e2.end());
            r.add_term(e, c1 * c2);
        }
    return r;
}

bool LaurentCharacter::has_nonnegative_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

namespace {

int permutation_sign(const std::vector<int>& p) {
    int sign = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) sign = -sign;
    return sign;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// GL_d alternant: sum over S_d of sgn(w) x^{w(mu)}.
LaurentCharacter gl_alternant(const std::vector<int>& mu) {
    const int d = static_cast<int>(mu.size());
    LaurentCharacter r(d);
    for (const auto& p : all_permutations(d)) {
        std::vector<int> e(d);
        for (int i = 0; i < d; ++i) e[p[i]] = mu[i];
        r.add_term(e, permutation_sign(p));
    }
    return r;
}

/// C2 alternant: sum over signed permutations of two letters.
LaurentCharacter c2_alternant(const std::vector<int>& mu) {
    LaurentCharacter r(2);
    for (const auto& p : all_permutations(2))
        for (int s1 : {1, -1})
            for (int s2 : {1, -1}) {
                std::vector<int> e(2);
                e[p[0]] = s1 * mu[0];
                e[p[1]] = s2 * mu[1];
                r.add_term(e, permutation_sign(p) * s1 * s2);
            }
    return r;
}

} // namespace

LaurentCharacter schur_character(const WeightTuple& lambda, int d) {
    if (lambda.size() != d) throw DescriptorError("weight length does not match the rank");
    if (!lambda.is_dominant()) throw DescriptorError("schur character needs a dominant weight");
    if (d > LaurentCharacter::kMaxRank)
        throw ResourceLimitError("character rank exceeds the cap of 4");

    const int tail = lambda.entries.empty() ? 0 : lambda.entries.back();
    if (tail < 0) {
        // phi_lambda = phi_{lambda + m} (x) det^{-m}
        const int m = -tail;
        std::vector<int> shifted = lambda.entries;
        for (int& v : shifted) v += m;
        LaurentCharacter chi = schur_character(WeightTuple(shifted), d);
        LaurentCharacter det = LaurentCharacter::monomial(std::vector<int>(d, -m));
        return chi * det;
    }

    std::vector<int> delta(d);
    for (int i = 0; i < d; ++i) delta[i] = d - 1 - i;
    std::vector<int> top(d);
    for (int i = 0; i < d; ++i) top[i] = lambda.entries[i] + delta[i];
    return gl_alternant(top).divide_exact(gl_alternant(delta));
}

mpz_class gl_dimension(const WeightTuple& lambda, int d) {
    if (lambda.size() != d) throw DescriptorError("weight length does not match the rank");
    if (!lambda.is_dominant()) throw DescriptorError("dimension needs a dominant weight");
    mpz_class num = 1, den = 1;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            num *= lambda.entries[i] - lambda.entries[j] + j - i;
            den *= j - i;
        }
    return num / den;
}

LaurentCharacter sp4_character(const SpFourIrrepLabel& label) {
    if (label.a < 0 || label.b < 0)
        throw DescriptorError("sp4 labels need nonnegative coordinates");
    // highest weight in the L-basis: (a+b, b); rho = (2, 1)
    const std::vector<int> top{label.a + label.b + 2, label.b + 1};
    const std::vector<int> rho{2, 1};
    return c2_alternant(top).divide_exact(c2_alternant(rho));
}

mpz_class sp4_dimension(const SpFourIrrepLabel& label) {
    const long a = label.a, b = label.b;
    return mpz_class((a + 1) * (b + 1)) * mpz_class((a + b + 2) * (a + 2 * b + 3)) / 6;
}

std::vector<LaurentCharacter> exterior_powers_all(const LaurentCharacter& base) {
    if (!base.has_nonnegative_coefficients())
        throw VerificationError("exterior powers need a genuine character");
    const mpz_class dim = base.eval_ones();
    if (dim > 64) throw ResourceLimitError("exterior algebra dimension exceeds the cap");
    const int n = static_cast<int>(dim.get_si());

    std::vector<LaurentCharacter> e(n + 1, LaurentCharacter(base.rank()));
    e[0] = LaurentCharacter::one(base.rank());
    // fold the weight multiset one line at a time: e_k += x^w * e_{k-1}
    for (const auto& [w, c] : base.terms()) {
        const long copies = c.get_si();
        for (long rep = 0; rep < copies; ++rep) {
            LaurentCharacter line = LaurentCharacter::monomial(w);
            for (int k = n; k >= 1; --k) e[k] += line * e[k - 1];
        }
    }
    return e;
}

LaurentCharacter exterior_power_character(const LaurentCharacter& base, int i) {
    if (i < 0) throw DescriptorError("exterior power index must be nonnegative");
    if (!base.has_nonnegative_coefficients())
        throw VerificationError("exterior powers need a genuine character");
    const mpz_class dim = base.eval_ones();
    if (mpz_class(i) > dim) return LaurentCharacter(base.rank());
    return exterior_powers_all(base)[static_cast<size_t>(i)];
}

std::map<WeightTuple, mpz_class> decompose_gl(const LaurentCharacter& chi, int d) {
    if (chi.rank() != d) throw InternalError("character rank does not match d");
    std::map<WeightTuple, mpz_class> out;
    LaurentCharacter rem = chi;
    std::map<WeightTuple, LaurentCharacter> schur_cache;
    while (!rem.is_zero()) {
        const auto top = std::prev(rem.terms().end());
        std::vector<int> e = top->first;
        WeightTuple lambda;
        try {
            lambda = WeightTuple(e);
        } catch (const DescriptorError&) {
            throw VerificationError("leading exponent is not dominant: not a character");
        }
        const mpz_class mult = top->second;
        if (mult < 0) throw VerificationError("negative multiplicity: not a character");
        auto it = schur_cache.find(lambda);
        if (it == schur_cache.end())
            it = schur_cache.emplace(lambda, schur_character(lambda, d)).first;
        rem -= it->second * mult;
        out[lambda] = mult;
    }
    return out;
}

std::map<WeightTuple, mpz_class> branch_sp4_to_gl2(const SpFourIrrepLabel& label) {
    // The Levi gl2 shares the maximal torus, so restriction is just a
    // reinterpretation of the same Laurent character.
    const auto result = decompose_gl(sp4_character(label), 2);
    mpz_class total = 0;
    for (const auto& [mu, mult] : result) total += mult * gl_dimension(mu, 2);
    if (total != sp4_dimension(label))
        throw InternalError("branching does not preserve dimension");
    return result;
}

DLambda d_lambda(const WeightTuple& lambda, const SimpleFactorDescriptor& factor) {
    if (!factor.d_lambda_override.empty()) {
        auto it = factor.d_lambda_override.find(lambda.entries);
        if (it != factor.d_lambda_override.end()) return {true, it->second};
    }
    switch (factor.brauer) {
        case BrauerTag::split:
            return {true, 1};
        case BrauerTag::quaternion_indefinite: {
            if (lambda.size() != 2) throw DescriptorError("quaternion factors have d = 2");
            const int diff = lambda.entries[0] - lambda.entries[1];
            return {true, diff % 2 == 0 ? 1 : 2};
        }
        case BrauerTag::unspecified:
            return {false, 0};
    }
    return {false, 0};
}

} // namespace motdec
