#include "motdec/weights.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace motdec {

namespace {

bool is_permutation_of_degree(const std::vector<int>& p, int n) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
    // (a*b)(i) = a(b(i))
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

MultiWeight apply_permutation(const MultiWeight& mw, const std::vector<int>& p) {
    // position i of the input moves to position p[i]
    MultiWeight out;
    out.per_sigma.resize(mw.per_sigma.size());
    for (size_t i = 0; i < p.size(); ++i) out.per_sigma[p[i]] = mw.per_sigma[i];
    return out;
}

} // namespace

WeightTuple::WeightTuple(std::vector<int> e) : entries(std::move(e)) {
    if (!is_dominant())
        throw DescriptorError("weight tuple is not weakly decreasing");
}

bool WeightTuple::is_dominant() const {
    for (size_t i = 1; i < entries.size(); ++i)
        if (entries[i - 1] < entries[i]) return false;
    return true;
}

long WeightTuple::abs_size() const {
    long s = 0;
    for (int v : entries) {
        if (v < 0) throw DescriptorError("|lambda| is only defined on the polynomial cone");
        s += v;
    }
    return s;
}

long WeightTuple::entry_sum() const {
    return std::accumulate(entries.begin(), entries.end(), 0L);
}

HalfWeightTuple HalfWeightTuple::from_doubled(std::vector<int> doubled2) {
    for (size_t i = 1; i < doubled2.size(); ++i) {
        if (doubled2[i - 1] < doubled2[i])
            throw DescriptorError("half-weight tuple is not weakly decreasing");
        if (((doubled2[i - 1] - doubled2[i]) % 2) != 0)
            throw DescriptorError("half-weight entries differ by a non-integer");
    }
    HalfWeightTuple t;
    t.doubled = std::move(doubled2);
    return t;
}

std::string to_string(BrauerTag t) {
    switch (t) {
        case BrauerTag::split: return "split";
        case BrauerTag::quaternion_indefinite: return "quaternion-indefinite";
        case BrauerTag::unspecified: return "unspecified";
    }
    return "?";
}

std::string to_string(InvolutionTag t) {
    switch (t) {
        case InvolutionTag::totally_real: return "totally-real";
        case InvolutionTag::cm: return "cm";
        case InvolutionTag::other: return "other";
    }
    return "?";
}

int SimpleFactorDescriptor::two_g_over_nd() const {
    const long nd = static_cast<long>(n) * d;
    if (nd <= 0 || (2 * g_factor) % nd != 0)
        throw DescriptorError("nd does not divide 2g for a simple factor");
    return static_cast<int>(2 * g_factor / nd);
}

void SimpleFactorDescriptor::validate() const {
    if (n < 1) throw DescriptorError("factor degree n must be positive");
    if (d < 1) throw DescriptorError("factor index d must be positive");
    if (n > PermutationGroup::kMaxDegree)
        throw ResourceLimitError("factor degree n exceeds the cap of 8");
    if (g_factor < 1) throw DescriptorError("factor dimension must be positive");
    for (const auto& p : galois_generators)
        if (!is_permutation_of_degree(p, n))
            throw DescriptorError("galois generator is not a permutation of {0,...,n-1}");
    if (conjugation && !is_permutation_of_degree(*conjugation, n))
        throw DescriptorError("conjugation is not a permutation of {0,...,n-1}");
    const PermutationGroup grp = galois_group(*this);
    if (!grp.is_transitive())
        throw DescriptorError("galois generators do not act transitively (center must be a field)");
    (void)two_g_over_nd();
    if (brauer == BrauerTag::quaternion_indefinite && d != 2)
        throw DescriptorError("brauer tag quaternion-indefinite requires d = 2");
}

void AbelianDescriptor::validate() const {
    if (g < 1) throw DescriptorError("relative dimension g must be positive");
    if (factors.empty()) throw DescriptorError("descriptor needs at least one simple factor");
    long sum = 0;
    for (const auto& f : factors) {
        f.validate();
        sum += f.g_factor;
    }
    if (sum != g) throw DescriptorError("factor dimensions do not sum to g");
}

PermutationGroup PermutationGroup::from_generators(int degree,
                                                   const std::vector<std::vector<int>>& gens) {
    if (degree < 1) throw DescriptorError("permutation group degree must be positive");
    if (degree > kMaxDegree)
        throw ResourceLimitError("permutation group degree exceeds the cap of 8");
    for (const auto& p : gens)
        if (!is_permutation_of_degree(p, degree))
            throw DescriptorError("invalid permutation generator");

    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);

    std::set<std::vector<int>> closure{id};
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& e : frontier)
            for (const auto& gen : gens) {
                auto prod = compose(gen, e);
                if (closure.insert(prod).second) next.push_back(std::move(prod));
            }
        frontier = std::move(next);
    }

    PermutationGroup grp;
    grp.degree_ = degree;
    grp.elements_.assign(closure.begin(), closure.end());
    return grp;
}

bool PermutationGroup::is_transitive() const {
    std::vector<bool> reached(degree_, false);
    long count = 0;
    for (const auto& e : elements_)
        if (!reached[e[0]]) {
            reached[e[0]] = true;
            ++count;
        }
    return count == degree_;
}

PermutationGroup galois_group(const SimpleFactorDescriptor& factor) {
    return PermutationGroup::from_generators(factor.n, factor.galois_generators);
}

long weight_of(const MultiWeight& blambda) {
    long s = 0;
    for (const auto& t : blambda.per_sigma) s += t.abs_size();
    return s;
}

MultiWeight dual_wdual(const MultiWeight& blambda, const SimpleFactorDescriptor& factor,
                       long g, bool cm_convention) {
    const long nd = static_cast<long>(factor.n) * factor.d;
    if ((2 * g) % nd != 0) throw DescriptorError("nd does not divide 2g");
    const int top = static_cast<int>(2 * g / nd);

    MultiWeight out;
    out.per_sigma.reserve(blambda.per_sigma.size());
    for (const auto& t : blambda.per_sigma) {
        std::vector<int> e(t.entries.size());
        for (size_t i = 0; i < e.size(); ++i)
            e[i] = top - t.entries[t.entries.size() - 1 - i];
        out.per_sigma.emplace_back(std::move(e));
    }
    if (cm_convention && factor.involution == InvolutionTag::cm && factor.conjugation)
        out = apply_permutation(out, *factor.conjugation);
    return out;
}

AdmClass classify(const MultiWeight& blambda, const SimpleFactorDescriptor& factor, long g) {
    const long nd = static_cast<long>(factor.n) * factor.d;
    if ((2 * g) % nd != 0) throw DescriptorError("nd does not divide 2g");
    const int top = static_cast<int>(2 * g / nd);

    bool pol = true, adm = true;
    for (const auto& t : blambda.per_sigma) {
        if (t.entries.empty()) continue;
        if (t.entries.back() < 0) pol = false;
        if (t.entries.front() > top) adm = false;
    }
    if (!pol) return AdmClass::not_pol;
    return adm ? AdmClass::adm : AdmClass::pol_not_adm;
}

bool lefschetz_admissible(const HalfWeightTuple& mu, const SimpleFactorDescriptor& factor,
                          long g) {
    const long nd = static_cast<long>(factor.n) * factor.d;
    // doubled bound 2*(g/nd); entries live in g/nd + Z, i.e. doubled entries
    // are congruent to the doubled bound mod 2
    if ((2 * g) % nd != 0) throw DescriptorError("nd does not divide 2g");
    const int bound2 = static_cast<int>(2 * g / nd);
    for (int v : mu.doubled)
        if (((v - bound2) % 2) != 0)
            throw DescriptorError("half-weight entry is not in g/nd + Z");
    for (size_t i = 1; i < mu.doubled.size(); ++i)
        if (mu.doubled[i - 1] < mu.doubled[i]) return false;
    if (mu.doubled.empty()) return true;
    return mu.doubled.front() <= bound2 && mu.doubled.back() >= -bound2;
}

OrbitClass orbit_of(const MultiWeight& blambda, const PermutationGroup& group) {
    if (group.degree() != blambda.n())
        throw DescriptorError("group degree does not match the multi-weight length");
    std::set<MultiWeight> orbit;
    for (const auto& e : group.elements()) orbit.insert(apply_permutation(blambda, e));
    OrbitClass oc;
    oc.representative = *orbit.begin();
    oc.orbit_size = static_cast<long>(orbit.size());
    oc.stabilizer_order = group.order() / oc.orbit_size;
    if (oc.orbit_size * oc.stabilizer_order != group.order())
        throw InternalError("orbit size does not divide the group order");
    return oc;
}

namespace {

/// All weakly decreasing d-tuples with entries in [0, top].
void enumerate_box(int d, int top, std::vector<int>& cur, std::vector<WeightTuple>& out) {
    if (static_cast<int>(cur.size()) == d) {
        out.emplace_back(cur);
        return;
    }
    const int hi = cur.empty() ? top : cur.back();
    for (int v = 0; v <= hi; ++v) {
        cur.push_back(v);
        enumerate_box(d, top, cur, out);
        cur.pop_back();
    }
}

std::vector<WeightTuple> adm_tuples(const SimpleFactorDescriptor& factor) {
    std::vector<WeightTuple> out;
    std::vector<int> cur;
    enumerate_box(factor.d, factor.two_g_over_nd(), cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<MultiWeight> enumerate_adm_elements(const SimpleFactorDescriptor& factor) {
    const auto tuples = adm_tuples(factor);
    const long per_sigma = static_cast<long>(tuples.size());
    long total = 1;
    for (int i = 0; i < factor.n; ++i) {
        total *= per_sigma;
        if (total > 1000000L)
            throw ResourceLimitError("admissible element count exceeds 10^6");
    }

    std::vector<MultiWeight> out;
    out.reserve(total);
    std::vector<size_t> idx(factor.n, 0);
    for (;;) {
        MultiWeight mw;
        mw.per_sigma.reserve(factor.n);
        for (int s = 0; s < factor.n; ++s) mw.per_sigma.push_back(tuples[idx[s]]);
        out.push_back(std::move(mw));
        int pos = factor.n - 1;
        while (pos >= 0 && ++idx[pos] == tuples.size()) idx[pos--] = 0;
        if (pos < 0) break;
    }
    return out;
}

std::vector<OrbitClass> enumerate_adm_orbits_factor(const SimpleFactorDescriptor& factor) {
    const PermutationGroup grp = galois_group(factor);
    std::map<MultiWeight, OrbitClass> by_rep;
    for (const auto& mw : enumerate_adm_elements(factor)) {
        OrbitClass oc = orbit_of(mw, grp);
        by_rep.emplace(oc.representative, std::move(oc));
    }
    std::vector<OrbitClass> out;
    out.reserve(by_rep.size());
    for (auto& [rep, oc] : by_rep) out.push_back(std::move(oc));
    std::stable_sort(out.begin(), out.end(), [](const OrbitClass& a, const OrbitClass& b) {
        const long wa = weight_of(a.representative), wb = weight_of(b.representative);
        if (wa != wb) return wa < wb;
        return a.representative < b.representative;
    });
    return out;
}

std::vector<long long> adm_generating_function(const SimpleFactorDescriptor& factor, long g) {
    SimpleFactorDescriptor f = factor;
    f.g_factor = g;
    const int top = f.two_g_over_nd();
    std::vector<long long> coeffs(static_cast<size_t>(factor.d) * top + 1, 0);
    std::vector<int> cur;
    std::vector<WeightTuple> tuples;
    enumerate_box(factor.d, top, cur, tuples);
    for (const auto& t : tuples) coeffs[static_cast<size_t>(t.abs_size())] += 1;
    return coeffs;
}

std::vector<long long> gaussian_binomial_box(int d, int N) {
    // [d+N choose d]_x by q-Pascal: B(d,N) = B(d-1,N) + x^d B(d,N-1)
    std::vector<std::vector<std::vector<long long>>> memo(
        d + 1, std::vector<std::vector<long long>>(N + 1));
    for (int i = 0; i <= d; ++i) memo[i][0] = {1};
    for (int j = 0; j <= N; ++j) memo[0][j] = {1};
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= N; ++j) {
            std::vector<long long> r(static_cast<size_t>(i) * j + 1, 0);
            const auto& a = memo[i - 1][j];
            for (size_t k = 0; k < a.size(); ++k) r[k] += a[k];
            const auto& b = memo[i][j - 1];
            for (size_t k = 0; k < b.size(); ++k) r[k + i] += b[k];
            memo[i][j] = std::move(r);
        }
    return memo[d][N];
}

std::pair<std::vector<long>, long> coarse_value(const OrbitClass& xi,
                                                const SimpleFactorDescriptor& factor) {
    std::vector<long> v;
    v.reserve(xi.representative.per_sigma.size());
    for (const auto& t : xi.representative.per_sigma) v.push_back(t.abs_size());

    const PermutationGroup grp = galois_group(factor);
    std::set<std::vector<long>> orbit;
    for (const auto& e : grp.elements()) {
        std::vector<long> w(v.size());
        for (size_t i = 0; i < v.size(); ++i) w[e[i]] = v[i];
        orbit.insert(std::move(w));
    }
    return {*orbit.begin(), static_cast<long>(orbit.size())};
}

std::string format_weight_tuple(const WeightTuple& t) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < t.entries.size(); ++i) {
        if (i) os << ',';
        os << t.entries[i];
    }
    os << ')';
    return os.str();
}

std::string format_multiweight(const MultiWeight& mw) {
    const int n = mw.n();
    const int d = n > 0 ? mw.per_sigma.front().size() : 0;
    std::ostringstream os;
    if (n == 1 && d == 1) {
        os << mw.per_sigma[0].entries[0];
    } else if (n == 1) {
        os << format_weight_tuple(mw.per_sigma[0]);
    } else if (d == 1) {
        os << '[';
        for (int s = 0; s < n; ++s) {
            if (s) os << ',';
            os << mw.per_sigma[s].entries[0];
        }
        os << ']';
    } else {
        os << '[';
        for (int s = 0; s < n; ++s) {
            if (s) os << ',';
            os << format_weight_tuple(mw.per_sigma[s]);
        }
        os << ']';
    }
    return os.str();
}

} // namespace motdec
