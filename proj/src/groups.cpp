#include "gdet/groups.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "gdet/error.hpp"

namespace gdet {

namespace {

long reduce_mod(long e, long m) {
    long r = e % m;
    return r < 0 ? r + m : r;
}

void require_positive(unsigned long n, const char* what) {
    if (n == 0) throw Error(ErrorKind::InvalidParameter, std::string(what) + " must be positive");
}

} // namespace

// ---------------------------------------------------------------------------
// GroupDescriptor

GroupDescriptor GroupDescriptor::cyclic(unsigned long n) {
    require_positive(n, "cyclic order");
    GroupDescriptor d;
    d.kind = GroupKind::Cyclic;
    d.n = n;
    return d;
}

GroupDescriptor GroupDescriptor::elementary(unsigned long p, unsigned long rank) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidParameter, "elementary abelian group needs a prime");
    require_positive(rank, "rank");
    GroupDescriptor d;
    d.kind = GroupKind::Elementary;
    d.p = p;
    d.n = rank;
    return d;
}

GroupDescriptor GroupDescriptor::product(std::vector<unsigned long> factors) {
    if (factors.empty()) throw Error(ErrorKind::InvalidParameter, "product needs at least one factor");
    for (auto f : factors) require_positive(f, "factor order");
    GroupDescriptor d;
    d.kind = GroupKind::Product;
    d.factors = std::move(factors);
    return d;
}

GroupDescriptor GroupDescriptor::heisenberg(unsigned long p) {
    require_odd_prime(p, "heisenberg group");
    GroupDescriptor d;
    d.kind = GroupKind::Heisenberg;
    d.p = p;
    return d;
}

GroupDescriptor GroupDescriptor::dihedral(unsigned long n) {
    require_positive(n, "dihedral n");
    GroupDescriptor d;
    d.kind = GroupKind::Dihedral;
    d.n = n;
    return d;
}

GroupDescriptor GroupDescriptor::dicyclic(unsigned long n) {
    require_positive(n, "dicyclic n");
    GroupDescriptor d;
    d.kind = GroupKind::Dicyclic;
    d.n = n;
    return d;
}

std::vector<unsigned long> GroupDescriptor::cyclic_factors() const {
    switch (kind) {
    case GroupKind::Cyclic: return {n};
    case GroupKind::Elementary: return std::vector<unsigned long>(n, p);
    case GroupKind::Product: return factors;
    default: return {};
    }
}

std::size_t GroupDescriptor::order() const {
    switch (kind) {
    case GroupKind::Heisenberg: return p * p * p;
    case GroupKind::Dihedral: return 2 * n;
    case GroupKind::Dicyclic: return 4 * n;
    default: {
        std::size_t o = 1;
        for (auto f : cyclic_factors()) o *= f;
        return o;
    }
    }
}

std::size_t GroupDescriptor::generator_count() const {
    switch (kind) {
    case GroupKind::Heisenberg: return 3;
    case GroupKind::Dihedral:
    case GroupKind::Dicyclic: return 2;
    default: return cyclic_factors().size();
    }
}

bool GroupDescriptor::is_abelian() const {
    switch (kind) {
    case GroupKind::Heisenberg: return false;
    case GroupKind::Dihedral: return n <= 2;
    case GroupKind::Dicyclic: return n <= 1;
    default: return true;
    }
}

std::string GroupDescriptor::name() const {
    switch (kind) {
    case GroupKind::Cyclic: return "Z_" + std::to_string(n);
    case GroupKind::Elementary:
        return "Z_" + std::to_string(p) + (n > 1 ? "^" + std::to_string(n) : "");
    case GroupKind::Product: {
        std::string s;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) s += " x ";
            s += "Z_" + std::to_string(factors[i]);
        }
        return s;
    }
    case GroupKind::Heisenberg: return "H_" + std::to_string(p);
    case GroupKind::Dihedral: return "D_" + std::to_string(2 * n);
    case GroupKind::Dicyclic: return "Q_" + std::to_string(4 * n);
    }
    return "?";
}

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec::Index GroupSpec::power(Index a, long e) const {
    const long ord = static_cast<long>(order_);
    long k = reduce_mod(e, ord);
    Index r = 0;
    Index base = a;
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

GroupSpec::Index GroupSpec::element(std::span<const long> exps) const {
    if (exps.size() != generators_.size()) {
        throw Error(ErrorKind::InvalidParameter,
                    desc_.name() + " expects " + std::to_string(generators_.size()) + " exponents, got " +
                        std::to_string(exps.size()));
    }
    Index r = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) r = mul(r, power(generators_[i], exps[i]));
    return r;
}

std::span<const long> GroupSpec::exponents(Index a) const {
    return {exps_.data() + static_cast<std::size_t>(a) * exps_width_, exps_width_};
}

std::shared_ptr<const GroupSpec> GroupSpec::build(const GroupDescriptor& desc, bool check_associativity) {
    std::shared_ptr<GroupSpec> g(new GroupSpec());
    g->desc_ = desc;
    const std::size_t order = desc.order();
    g->order_ = order;
    g->mul_.resize(order * order);
    g->exps_width_ = desc.generator_count();
    g->exps_.resize(order * g->exps_width_);

    // Each family provides exps(index) and the product on exponent vectors.
    std::vector<std::vector<long>> elems(order);
    auto index_of = [&](const std::vector<long>& e) -> Index {
        std::size_t idx = 0;
        switch (desc.kind) {
        case GroupKind::Heisenberg:
            idx = (static_cast<std::size_t>(e[0]) * desc.p + e[1]) * desc.p + e[2];
            break;
        case GroupKind::Dihedral:
        case GroupKind::Dicyclic:
            idx = static_cast<std::size_t>(e[0]) * 2 + e[1];
            break;
        default: {
            auto f = desc.cyclic_factors();
            for (std::size_t i = 0; i < f.size(); ++i) idx = idx * f[i] + e[i];
        }
        }
        return static_cast<Index>(idx);
    };

    auto product = [&](const std::vector<long>& a, const std::vector<long>& b) {
        std::vector<long> r(a.size());
        switch (desc.kind) {
        case GroupKind::Heisenberg: {
            const long p = static_cast<long>(desc.p);
            // x^a y^b z^c . x^d y^e z^f = x^{a+d} y^{b+e} z^{c+f+bd}
            r[0] = (a[0] + b[0]) % p;
            r[1] = (a[1] + b[1]) % p;
            r[2] = (a[2] + b[2] + a[1] * b[0]) % p;
            break;
        }
        case GroupKind::Dihedral: {
            const long n = static_cast<long>(desc.n);
            // Y X^c = X^{-c} Y
            r[0] = reduce_mod(a[0] + (a[1] ? -b[0] : b[0]), n);
            r[1] = (a[1] + b[1]) % 2;
            break;
        }
        case GroupKind::Dicyclic: {
            const long m = static_cast<long>(2 * desc.n);
            long x = a[0] + (a[1] ? -b[0] : b[0]);
            if (a[1] && b[1]) x += static_cast<long>(desc.n); // Y^2 = X^n
            r[0] = reduce_mod(x, m);
            r[1] = (a[1] + b[1]) % 2;
            break;
        }
        default: {
            auto f = desc.cyclic_factors();
            for (std::size_t i = 0; i < f.size(); ++i) r[i] = (a[i] + b[i]) % static_cast<long>(f[i]);
        }
        }
        return r;
    };

    // enumerate exponent vectors in lexicographic order
    std::vector<long> radix;
    switch (desc.kind) {
    case GroupKind::Heisenberg: radix = {long(desc.p), long(desc.p), long(desc.p)}; break;
    case GroupKind::Dihedral: radix = {long(desc.n), 2}; break;
    case GroupKind::Dicyclic: radix = {long(2 * desc.n), 2}; break;
    default:
        for (auto f : desc.cyclic_factors()) radix.push_back(long(f));
    }
    std::vector<long> cur(radix.size(), 0);
    for (std::size_t idx = 0; idx < order; ++idx) {
        elems[idx] = cur;
        for (std::size_t i = radix.size(); i-- > 0;) {
            if (++cur[i] < radix[i]) break;
            cur[i] = 0;
        }
    }

    static constexpr const char* hnames[] = {"x", "y", "z"};
    static constexpr const char* dnames[] = {"X", "Y"};
    g->labels_.resize(order);
    for (std::size_t idx = 0; idx < order; ++idx) {
        const auto& e = elems[idx];
        std::copy(e.begin(), e.end(), g->exps_.begin() + static_cast<long>(idx * g->exps_width_));
        std::string label;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            std::string gen;
            if (desc.kind == GroupKind::Heisenberg) gen = hnames[i];
            else if (desc.kind == GroupKind::Dihedral || desc.kind == GroupKind::Dicyclic) gen = dnames[i];
            else gen = e.size() == 1 ? "x" : "x" + std::to_string(i + 1);
            if (!label.empty()) label += " ";
            label += gen;
            if (e[i] != 1) label += "^" + std::to_string(e[i]);
        }
        g->labels_[idx] = label.empty() ? "1" : label;
    }

    for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
            g->mul_[a * order + b] = index_of(product(elems[a], elems[b]));
        }
    }
    g->inv_.assign(order, 0);
    for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
            if (g->mul_[a * order + b] == 0) {
                g->inv_[a] = static_cast<Index>(b);
                break;
            }
        }
    }
    for (std::size_t i = 0; i < radix.size(); ++i) {
        std::vector<long> e(radix.size(), 0);
        e[i] = 1 % radix[i];
        g->generators_.push_back(index_of(e));
    }

    g->validate(check_associativity);
    return g;
}

void GroupSpec::validate(bool check_associativity) const {
    const std::size_t n = order_;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorKind::InvalidParameter, desc_.name() + " table invalid: " + why);
    };
    for (std::size_t a = 0; a < n; ++a) {
        if (mul(0, a) != a || mul(a, 0) != a) fail("index 0 is not the identity");
        if (mul(a, inv_[a]) != 0 || mul(inv_[a], a) != 0) fail("inverse table");
    }
    std::vector<char> seen(n);
    for (std::size_t a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t b = 0; b < n; ++b) seen[mul(a, b)] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end()) fail("rows are not permutations");
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t b = 0; b < n; ++b) seen[mul(b, a)] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end()) fail("columns are not permutations");
    }
    if (check_associativity && n <= 200) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const Index ab = mul(a, b);
                for (std::size_t c = 0; c < n; ++c) {
                    if (mul(ab, c) != mul(a, mul(b, c))) fail("not associative");
                }
            }
    }
}

// ---------------------------------------------------------------------------
// Group ring

GroupRingElt::GroupRingElt(GroupPtr group) : group_(std::move(group)), coeffs_(group_->order()) {}

GroupRingElt::GroupRingElt(GroupPtr group, std::vector<Integer> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != group_->order()) {
        throw Error(ErrorKind::InvalidParameter, "group ring element needs one coefficient per element");
    }
}

Integer GroupRingElt::augmentation() const {
    Integer s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

GroupRingElt convolve(const GroupRingElt& f1, const GroupRingElt& f2) {
    if (f1.group_ptr() != f2.group_ptr() && !(f1.group().descriptor() == f2.group().descriptor())) {
        throw Error(ErrorKind::InvalidParameter, "convolution of elements from different groups");
    }
    const auto& g = f1.group();
    GroupRingElt out(f1.group_ptr());
    // (F1 * F2)(g) = sum_h F1(h) F2(h^{-1} g): each pair (h, k) contributes to h k
    for (GroupSpec::Index h = 0; h < g.order(); ++h) {
        if (sgn(f1[h]) == 0) continue;
        for (GroupSpec::Index k = 0; k < g.order(); ++k) {
            if (sgn(f2[k]) == 0) continue;
            out[g.mul(h, k)] += f1[h] * f2[k];
        }
    }
    return out;
}

SquareMatrix<Integer> cayley_matrix(const GroupRingElt& f) {
    const auto& g = f.group();
    const std::size_t n = g.order();
    std::vector<Integer> entries;
    entries.reserve(n * n);
    for (GroupSpec::Index i = 0; i < n; ++i) {
        for (GroupSpec::Index j = 0; j < n; ++j) entries.push_back(f[g.mul(i, g.inv(j))]);
    }
    return SquareMatrix<Integer>(n, std::move(entries));
}

Integer group_determinant(const GroupRingElt& f) { return det_bareiss(cayley_matrix(f)); }

// ---------------------------------------------------------------------------
// Heisenberg polynomials

HeisenbergPoly::HeisenbergPoly(unsigned long p) : p_(p) {
    require_odd_prime(p, "heisenberg polynomial");
    a_.resize(p * p * p);
}

HeisenbergPoly::HeisenbergPoly(unsigned long p, std::vector<Integer> coeffs) : HeisenbergPoly(p) {
    if (coeffs.size() != p * p * p) {
        throw Error(ErrorKind::InvalidParameter, "heisenberg polynomial needs p^3 coefficients");
    }
    a_ = std::move(coeffs);
}

void HeisenbergPoly::add(long i, long j, long k, const Integer& c) {
    const long p = static_cast<long>(p_);
    at(reduce_mod(i, p), reduce_mod(j, p), reduce_mod(k, p)) += c;
}

Integer HeisenbergPoly::value_at_one() const {
    return std::accumulate(a_.begin(), a_.end(), Integer(0));
}

std::vector<Integer> HeisenbergPoly::slice(unsigned long i) const {
    const std::size_t w = p_ * p_;
    return {a_.begin() + static_cast<long>(i * w), a_.begin() + static_cast<long>((i + 1) * w)};
}

std::vector<Integer> HeisenbergPoly::at_z_one() const {
    std::vector<Integer> b(p_ * p_);
    for (unsigned long i = 0; i < p_; ++i)
        for (unsigned long j = 0; j < p_; ++j)
            for (unsigned long k = 0; k < p_; ++k) b[i * p_ + j] += at(i, j, k);
    return b;
}

HeisenbergPoly HeisenbergPoly::operator-() const {
    HeisenbergPoly r = *this;
    for (auto& c : r.a_) c = -c;
    return r;
}

Word parse_word(std::string_view text) {
    Word w;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (text.substr(i) == "1") return w;
    while (i < text.size()) {
        const char c = text[i];
        if (c != 'x' && c != 'y' && c != 'z') {
            throw Error(ErrorKind::ParseError, "unexpected '" + std::string(1, c) + "' in word '" +
                                                   std::string(text) + "'");
        }
        ++i;
        long power = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            std::size_t start = i;
            if (i < text.size() && text[i] == '-') ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            const std::string num(text.substr(start, i - start));
            if (num.empty() || num == "-") {
                throw Error(ErrorKind::ParseError, "missing exponent in word '" + std::string(text) + "'");
            }
            power = std::stol(num);
        }
        w.push_back({c, power});
        skip_ws();
    }
    return w;
}

std::array<unsigned long, 3> heisenberg_reduce(const Word& word, unsigned long p) {
    const long P = static_cast<long>(p);
    long a = 0, b = 0, c = 0;
    for (const auto& letter : word) {
        const long times = reduce_mod(letter.power, P);
        for (long t = 0; t < times; ++t) {
            switch (letter.gen) {
            case 'x':
                // x^a y^b z^c x = x^{a+1} y^b z^{c+b}: move x left past y^b
                a = (a + 1) % P;
                c = (c + b) % P;
                break;
            case 'y': b = (b + 1) % P; break;
            case 'z': c = (c + 1) % P; break;
            default:
                throw Error(ErrorKind::ParseError, "unknown generator '" + std::string(1, letter.gen) + "'");
            }
        }
    }
    return {static_cast<unsigned long>(a), static_cast<unsigned long>(b), static_cast<unsigned long>(c)};
}

HeisenbergPoly heisenberg_normal_form(std::span<const std::pair<Word, Integer>> terms, unsigned long p) {
    HeisenbergPoly f(p);
    for (const auto& [word, coef] : terms) {
        const auto [a, b, c] = heisenberg_reduce(word, p);
        f.at(a, b, c) += coef;
    }
    return f;
}

HeisenbergPoly heisenberg_normal_form(std::span<const std::pair<std::string, Integer>> terms, unsigned long p) {
    std::vector<std::pair<Word, Integer>> parsed;
    parsed.reserve(terms.size());
    for (const auto& [text, coef] : terms) parsed.emplace_back(parse_word(text), coef);
    return heisenberg_normal_form(std::span<const std::pair<Word, Integer>>(parsed), p);
}

GroupRingElt to_group_ring(const HeisenbergPoly& f, GroupPtr group) {
    const auto& d = group->descriptor();
    if (d.kind != GroupKind::Heisenberg || d.p != f.prime()) {
        throw Error(ErrorKind::InvalidParameter, "polynomial over H_" + std::to_string(f.prime()) +
                                                     " placed in " + d.name());
    }
    // element index (a, b, c) -> (a p + b) p + c matches the coefficient layout
    return GroupRingElt(std::move(group), std::vector<Integer>(f.coeffs().begin(), f.coeffs().end()));
}

GroupRingElt to_group_ring(const HeisenbergPoly& f) {
    return to_group_ring(f, GroupSpec::build(GroupDescriptor::heisenberg(f.prime())));
}

} // namespace gdet
