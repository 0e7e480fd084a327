#include "qcoinv/algebra.hpp"

#include "qcoinv/debug.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace qcoinv {

namespace debug {
Corruptions& corruptions() {
    static Corruptions c;
    return c;
}
}  // namespace debug

// ---------------------------------------------------------------------------
// AlgebraSpec

AlgebraPtr AlgebraSpec::quantum_matrix(int m, int n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("quantum_matrix: m, n >= 1 required");
    auto a = std::shared_ptr<AlgebraSpec>(new AlgebraSpec());
    a->kind_ = Kind::QuantumMatrix;
    a->m_ = m;
    a->n_ = n;
    a->factors_ = {a.get()};
    a->factor_gen_offset_ = {0, m * n};
    return a;
}

AlgebraPtr AlgebraSpec::free_algebra(std::vector<std::string> labels, std::vector<int> degrees) {
    if (labels.empty() || labels.size() != degrees.size())
        throw std::invalid_argument("free_algebra: labels/degrees mismatch");
    for (int d : degrees)
        if (d < 1)
            throw std::invalid_argument("free_algebra: generator degrees >= 1 required");
    auto a = std::shared_ptr<AlgebraSpec>(new AlgebraSpec());
    a->kind_ = Kind::Free;
    a->labels_ = std::move(labels);
    a->weights_ = std::move(degrees);
    a->factors_ = {a.get()};
    a->factor_gen_offset_ = {0, static_cast<int>(a->labels_.size())};
    return a;
}

AlgebraPtr AlgebraSpec::tensor(AlgebraPtr left, AlgebraPtr right) {
    auto a = std::shared_ptr<AlgebraSpec>(new AlgebraSpec());
    a->kind_ = Kind::Tensor;
    a->left_ = std::move(left);
    a->right_ = std::move(right);
    for (const AlgebraSpec* f : a->left_->factors())
        a->factors_.push_back(f);
    for (const AlgebraSpec* f : a->right_->factors())
        a->factors_.push_back(f);
    a->factor_gen_offset_.push_back(0);
    for (const AlgebraSpec* f : a->factors_)
        a->factor_gen_offset_.push_back(a->factor_gen_offset_.back() + f->generator_count());
    return a;
}

int AlgebraSpec::generator_count() const {
    if (kind_ == Kind::QuantumMatrix)
        return m_ * n_;
    if (kind_ == Kind::Free)
        return static_cast<int>(labels_.size());
    return factor_gen_offset_.back();
}

int AlgebraSpec::generator_degree(int g) const {
    auto [f, local] = locate_generator(g);
    const AlgebraSpec* fac = factors_[f];
    if (fac->kind_ == Kind::QuantumMatrix)
        return 1;
    return fac->weights_[local];
}

std::pair<int, int> AlgebraSpec::locate_generator(int g) const {
    if (kind_ != Kind::Tensor)
        return {0, g};
    for (size_t f = 0; f + 1 < factor_gen_offset_.size(); ++f)
        if (g < factor_gen_offset_[f + 1])
            return {static_cast<int>(f), g - factor_gen_offset_[f]};
    throw std::out_of_range("locate_generator");
}

int AlgebraSpec::global_generator(int factor, int local) const {
    if (kind_ != Kind::Tensor)
        return local;
    return factor_gen_offset_[factor] + local;
}

std::string AlgebraSpec::generator_label(int g) const {
    auto [f, local] = locate_generator(g);
    const AlgebraSpec* fac = factors_[f];
    if (fac->kind_ == Kind::QuantumMatrix) {
        int i = local / fac->n_ + 1;
        int j = local % fac->n_ + 1;
        std::string s = "X[" + std::to_string(i) + "," + std::to_string(j) + "]";
        if (factor_count() > 1)
            s += "@" + std::to_string(f);
        return s;
    }
    return fac->labels_[local];
}

bool AlgebraSpec::same_as(const AlgebraSpec& other) const {
    if (factors_.size() != other.factors_.size())
        return false;
    for (size_t i = 0; i < factors_.size(); ++i) {
        const AlgebraSpec* a = factors_[i];
        const AlgebraSpec* b = other.factors_[i];
        if (a->kind_ != b->kind_)
            return false;
        if (a->kind_ == Kind::QuantumMatrix) {
            if (a->m_ != b->m_ || a->n_ != b->n_)
                return false;
        } else {
            if (a->labels_ != b->labels_ || a->weights_ != b->weights_)
                return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// NormalMonomial

bool operator<(const NormalMonomial& a, const NormalMonomial& b) {
    // Flipped exponent-vector order so X_11^d sorts first and generators come
    // in row-major order X_11 < X_12 < ... within a graded component.
    return b.comps < a.comps;
}

NormalMonomial unit_monomial(const AlgebraSpec& a) {
    NormalMonomial mon;
    mon.comps.reserve(a.factor_count());
    for (const AlgebraSpec* f : a.factors()) {
        if (f->kind() == AlgebraSpec::Kind::QuantumMatrix)
            mon.comps.emplace_back(f->generator_count(), 0);
        else
            mon.comps.emplace_back();  // empty word
    }
    return mon;
}

NormalMonomial generator_monomial(const AlgebraSpec& a, int g) {
    NormalMonomial mon = unit_monomial(a);
    auto [f, local] = a.locate_generator(g);
    if (a.factors()[f]->kind() == AlgebraSpec::Kind::QuantumMatrix)
        mon.comps[f][local] = 1;
    else
        mon.comps[f].push_back(local);
    return mon;
}

int monomial_degree(const AlgebraSpec& a, const NormalMonomial& mon) {
    int d = 0;
    for (int f = 0; f < a.factor_count(); ++f) {
        const AlgebraSpec* fac = a.factors()[f];
        if (fac->kind() == AlgebraSpec::Kind::QuantumMatrix) {
            for (int e : mon.comps[f])
                d += e;
        } else {
            for (int g : mon.comps[f])
                d += fac->free_degrees()[g];
        }
    }
    return d;
}

bool is_unit_monomial(const AlgebraSpec& a, const NormalMonomial& mon) {
    for (int f = 0; f < a.factor_count(); ++f) {
        if (a.factors()[f]->kind() == AlgebraSpec::Kind::QuantumMatrix) {
            for (int e : mon.comps[f])
                if (e != 0)
                    return false;
        } else if (!mon.comps[f].empty()) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Quantum-matrix straightening

namespace {

using ExpVec = std::vector<int>;
using QMTerms = std::map<ExpVec, Laurent>;

void qm_accumulate(QMTerms& out, const ExpVec& mon, const Laurent& c) {
    auto [it, inserted] = out.try_emplace(mon, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            out.erase(it);
    }
}

/// (normal monomial `exps`) * X_g, straightened; results accumulate into out.
/// The relation conventions: for generators G < H in row-major order,
///   same row or column:    H*G = q^-1 G*H
///   rows up, columns down: H*G = G*H
///   rows up, columns up:   H*G = G*H - (q - q^-1) * A*B
/// where A, B are the anti-diagonal pair of the 2x2 pattern.
void qm_mul_gen(int ncols, const ExpVec& exps, int g, const Laurent& coeff, QMTerms& out) {
    int h = -1;
    for (int k = static_cast<int>(exps.size()) - 1; k >= 0; --k) {
        if (exps[k] > 0) {
            h = k;
            break;
        }
    }
    if (h <= g) {
        ExpVec mon = exps;
        ++mon[g];
        qm_accumulate(out, mon, coeff);
        return;
    }
    ExpVec rest = exps;
    --rest[h];
    const int ih = h / ncols, jh = h % ncols;
    const int ig = g / ncols, jg = g % ncols;

    const int swap_exp = debug::corruptions().flip_row_relation ? 1 : -1;

    if (ih == ig || jh == jg) {
        QMTerms sub;
        qm_mul_gen(ncols, rest, g, coeff * Laurent::q(swap_exp), sub);
        for (auto& [mon, c] : sub) {
            ExpVec m2 = mon;
            ++m2[h];
            qm_accumulate(out, m2, c);
        }
        return;
    }
    if (jh < jg) {  // rows ascend, columns descend: plain commutation
        QMTerms sub;
        qm_mul_gen(ncols, rest, g, coeff, sub);
        for (auto& [mon, c] : sub) {
            ExpVec m2 = mon;
            ++m2[h];
            qm_accumulate(out, m2, c);
        }
        return;
    }
    // rows ascend, columns ascend
    {
        QMTerms sub;
        qm_mul_gen(ncols, rest, g, coeff, sub);
        for (auto& [mon, c] : sub) {
            ExpVec m2 = mon;
            ++m2[h];
            qm_accumulate(out, m2, c);
        }
    }
    {
        const int a = ig * ncols + jh;
        const int b = ih * ncols + jg;
        Laurent c2 = coeff * (Laurent::q(1) - Laurent::q(-1));
        QMTerms sub1;
        qm_mul_gen(ncols, rest, a, -c2, sub1);
        for (const auto& [mon, c] : sub1)
            qm_mul_gen(ncols, mon, b, c, out);
    }
}

/// Product of two normal quantum-matrix monomials.
QMTerms qm_mul_mon(int ncols, const ExpVec& u, const ExpVec& v) {
    QMTerms acc;
    acc.emplace(u, Laurent::one());
    for (int g = 0; g < static_cast<int>(v.size()); ++g) {
        for (int rep = 0; rep < v[g]; ++rep) {
            QMTerms next;
            for (const auto& [mon, c] : acc)
                qm_mul_gen(ncols, mon, g, c, next);
            acc = std::move(next);
        }
    }
    return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// NCPoly

NCPoly NCPoly::one(AlgebraPtr a) {
    NCPoly p(a);
    p.terms_.emplace(unit_monomial(*a), Laurent::one());
    return p;
}

NCPoly NCPoly::generator(AlgebraPtr a, int g) {
    NCPoly p(a);
    p.terms_.emplace(generator_monomial(*a, g), Laurent::one());
    return p;
}

NCPoly NCPoly::monomial(AlgebraPtr a, NormalMonomial mon, Laurent coeff) {
    NCPoly p(a);
    if (!coeff.is_zero())
        p.terms_.emplace(std::move(mon), std::move(coeff));
    return p;
}

void NCPoly::add_term(const NormalMonomial& mon, const Laurent& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(mon, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

NCPoly NCPoly::operator-() const {
    NCPoly r(algebra_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

NCPoly operator+(const NCPoly& a, const NCPoly& b) {
    NCPoly r = a;
    if (!r.algebra_)
        r.algebra_ = b.algebra_;
    for (const auto& [m, c] : b.terms_)
        r.add_term(m, c);
    return r;
}

NCPoly operator-(const NCPoly& a, const NCPoly& b) {
    return a + (-b);
}

NCPoly NCPoly::scaled(const Laurent& c) const {
    NCPoly r(algebra_);
    if (c.is_zero())
        return r;
    for (const auto& [m, k] : terms_)
        r.terms_.emplace(m, k * c);
    return r;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    if (!a.algebra_ || !b.algebra_ || !a.algebra_->same_as(*b.algebra_))
        throw std::invalid_argument("NCPoly: algebra mismatch in product");
    const AlgebraSpec& alg = *a.algebra_;
    NCPoly out(a.algebra_);
    for (const auto& [u, cu] : a.terms_) {
        for (const auto& [v, cv] : b.terms_) {
            // Componentwise per tensor factor; factors from different sides commute.
            std::vector<std::pair<NormalMonomial, Laurent>> partial;
            partial.push_back({NormalMonomial{}, cu * cv});
            partial[0].first.comps.reserve(alg.factor_count());
            for (int f = 0; f < alg.factor_count(); ++f) {
                const AlgebraSpec* fac = alg.factors()[f];
                if (fac->kind() == AlgebraSpec::Kind::Free) {
                    std::vector<int> w = u.comps[f];
                    w.insert(w.end(), v.comps[f].begin(), v.comps[f].end());
                    for (auto& [mon, c] : partial)
                        mon.comps.push_back(w);
                } else {
                    QMTerms prod = qm_mul_mon(fac->qm_cols(), u.comps[f], v.comps[f]);
                    if (prod.size() == 1) {
                        for (auto& [mon, c] : partial) {
                            mon.comps.push_back(prod.begin()->first);
                            c *= prod.begin()->second;
                        }
                    } else {
                        std::vector<std::pair<NormalMonomial, Laurent>> next;
                        next.reserve(partial.size() * prod.size());
                        for (const auto& [mon, c] : partial) {
                            for (const auto& [pm, pc] : prod) {
                                NormalMonomial m2 = mon;
                                m2.comps.push_back(pm);
                                next.push_back({std::move(m2), c * pc});
                            }
                        }
                        partial = std::move(next);
                    }
                }
            }
            for (auto& [mon, c] : partial)
                out.add_term(mon, c);
        }
    }
    return out;
}

int NCPoly::homogeneous_degree() const {
    if (terms_.empty())
        return 0;
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int dm = monomial_degree(*algebra_, m);
        if (d == -1)
            d = dm;
        else if (d != dm)
            return -1;
    }
    return d;
}

bool NCPoly::is_homogeneous() const {
    return terms_.empty() || homogeneous_degree() >= 0;
}

NCPoly NCPoly::specialized(const Rational& lambda) const {
    NCPoly r(algebra_);
    for (const auto& [m, c] : terms_) {
        Rational v = c.eval_at(lambda);
        if (!v.is_zero())
            r.terms_.emplace(m, Laurent(std::move(v)));
    }
    return r;
}

std::string NCPoly::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty())
            out += " + ";
        out += "(" + c.str() + ")*";
        std::string mono;
        for (int f = 0; f < algebra_->factor_count(); ++f) {
            const AlgebraSpec* fac = algebra_->factors()[f];
            if (fac->kind() == AlgebraSpec::Kind::QuantumMatrix) {
                for (int g = 0; g < fac->generator_count(); ++g) {
                    if (m.comps[f][g] == 0)
                        continue;
                    if (!mono.empty())
                        mono += "*";
                    mono += algebra_->generator_label(algebra_->global_generator(f, g));
                    if (m.comps[f][g] > 1)
                        mono += "^" + std::to_string(m.comps[f][g]);
                }
            } else {
                for (int g : m.comps[f]) {
                    if (!mono.empty())
                        mono += "*";
                    mono += fac->free_labels()[g];
                }
            }
        }
        out += mono.empty() ? "1" : mono;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Graded bases

namespace {

void enumerate_exps(int ngens, int d, ExpVec& cur, int pos, std::vector<ExpVec>& out) {
    if (pos == ngens - 1) {
        cur[pos] = d;
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= d; ++e) {
        cur[pos] = e;
        enumerate_exps(ngens, d - e, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

void enumerate_words(const std::vector<int>& weights, int d, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    for (int g = 0; g < static_cast<int>(weights.size()); ++g) {
        if (weights[g] > d)
            continue;
        cur.push_back(g);
        enumerate_words(weights, d - weights[g], cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<NormalMonomial> graded_basis(const AlgebraSpec& a, int d) {
    if (d < 0)
        throw std::invalid_argument("graded_basis: negative degree");
    // Per-factor bases for every degree split, then the cartesian product.
    const int nf = a.factor_count();
    std::vector<std::vector<std::vector<NormalMonomial>>> per_factor(nf);  // [f][deg]
    for (int f = 0; f < nf; ++f) {
        per_factor[f].resize(d + 1);
        const AlgebraSpec* fac = a.factors()[f];
        for (int k = 0; k <= d; ++k) {
            std::vector<NormalMonomial>& dst = per_factor[f][k];
            if (fac->kind() == AlgebraSpec::Kind::QuantumMatrix) {
                std::vector<ExpVec> exps;
                ExpVec cur(fac->generator_count(), 0);
                enumerate_exps(fac->generator_count(), k, cur, 0, exps);
                for (auto& e : exps)
                    dst.push_back(NormalMonomial{{std::move(e)}});
            } else {
                std::vector<std::vector<int>> words;
                std::vector<int> cur;
                enumerate_words(fac->free_degrees(), k, cur, words);
                for (auto& w : words)
                    dst.push_back(NormalMonomial{{std::move(w)}});
            }
        }
    }
    std::vector<NormalMonomial> out;
    std::vector<NormalMonomial> partial;
    std::function<void(int, int, NormalMonomial&)> rec = [&](int f, int rem, NormalMonomial& acc) {
        if (f == nf - 1) {
            for (const NormalMonomial& m : per_factor[f][rem]) {
                acc.comps.push_back(m.comps[0]);
                out.push_back(acc);
                acc.comps.pop_back();
            }
            return;
        }
        for (int k = 0; k <= rem; ++k) {
            for (const NormalMonomial& m : per_factor[f][k]) {
                acc.comps.push_back(m.comps[0]);
                rec(f + 1, rem - k, acc);
                acc.comps.pop_back();
            }
        }
    };
    NormalMonomial acc;
    rec(0, d, acc);
    std::sort(out.begin(), out.end());
    return out;
}

long long graded_dimension(const AlgebraSpec& a, int d) {
    // Per-factor dimension sequences convolved across factors.
    std::vector<long long> dims(d + 1, 0);
    dims[0] = 1;
    for (const AlgebraSpec* fac : a.factors()) {
        std::vector<long long> fdim(d + 1, 0);
        if (fac->kind() == AlgebraSpec::Kind::QuantumMatrix) {
            const int g = fac->generator_count();
            fdim[0] = 1;
            for (int k = 1; k <= d; ++k) {
                // C(g + k - 1, k) built incrementally to avoid overflow surprises
                fdim[k] = fdim[k - 1] * (g + k - 1) / k;
            }
        } else {
            fdim[0] = 1;
            for (int k = 1; k <= d; ++k) {
                long long s = 0;
                for (int w : fac->free_degrees())
                    if (w <= k)
                        s += fdim[k - w];
                fdim[k] = s;
            }
        }
        std::vector<long long> next(d + 1, 0);
        for (int i = 0; i <= d; ++i)
            for (int j = 0; i + j <= d; ++j)
                next[i + j] += dims[i] * fdim[j];
        dims = std::move(next);
    }
    return dims[d];
}

std::vector<Laurent> coordinate_vector(const NCPoly& f, int d) {
    if (!f.is_zero() && f.homogeneous_degree() != d)
        throw std::invalid_argument("coordinate_vector: element not homogeneous of stated degree");
    std::vector<NormalMonomial> basis = graded_basis(*f.algebra(), d);
    std::map<NormalMonomial, int> index;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i)
        index.emplace(basis[i], i);
    std::vector<Laurent> out(basis.size());
    for (const auto& [m, c] : f.terms()) {
        auto it = index.find(m);
        if (it == index.end())
            throw std::logic_error("coordinate_vector: monomial outside basis");
        out[it->second] = c;
    }
    return out;
}

NCPoly from_coordinates(AlgebraPtr a, int d, const std::vector<Laurent>& coords) {
    std::vector<NormalMonomial> basis = graded_basis(*a, d);
    if (coords.size() != basis.size())
        throw std::invalid_argument("from_coordinates: wrong length");
    NCPoly f(a);
    for (size_t i = 0; i < basis.size(); ++i)
        if (!coords[i].is_zero())
            f.add_term(basis[i], coords[i]);
    return f;
}

// ---------------------------------------------------------------------------
// AlgebraHom

AlgebraHom::AlgebraHom(AlgebraPtr source, AlgebraPtr target, std::vector<NCPoly> images,
                       std::optional<int> degree_multiplier)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)),
      multiplier_(degree_multiplier) {
    if (static_cast<int>(images_.size()) != source_->generator_count())
        throw std::invalid_argument("AlgebraHom: one image per generator required");
    for (int g = 0; g < static_cast<int>(images_.size()); ++g) {
        const NCPoly& im = images_[g];
        if (im.is_zero())
            continue;
        if (!im.algebra()->same_as(*target_))
            throw std::invalid_argument("AlgebraHom: image in wrong algebra");
        if (multiplier_) {
            int want = *multiplier_ * source_->generator_degree(g);
            if (im.homogeneous_degree() != want)
                throw std::invalid_argument("AlgebraHom: image degree inconsistent with multiplier");
        }
    }
}

NCPoly AlgebraHom::apply(const NCPoly& f) const {
    if (!f.algebra()->same_as(*source_))
        throw std::invalid_argument("AlgebraHom: element not in source algebra");
    NCPoly out(target_);
    for (const auto& [mon, coeff] : f.terms()) {
        NCPoly acc = NCPoly::one(target_).scaled(coeff);
        for (int fidx = 0; fidx < source_->factor_count(); ++fidx) {
            const AlgebraSpec* fac = source_->factors()[fidx];
            if (fac->kind() == AlgebraSpec::Kind::QuantumMatrix) {
                for (int local = 0; local < fac->generator_count(); ++local)
                    for (int rep = 0; rep < mon.comps[fidx][local]; ++rep)
                        acc *= images_[source_->global_generator(fidx, local)];
            } else {
                for (int local : mon.comps[fidx])
                    acc *= images_[source_->global_generator(fidx, local)];
            }
        }
        out += acc;
    }
    return out;
}

// ---------------------------------------------------------------------------
// QM text round trip

std::string qm_to_string(const NCPoly& f) {
    return f.str();
}

namespace {

void expect(std::string_view s, size_t& i, char c) {
    if (i >= s.size() || s[i] != c)
        throw std::invalid_argument("qm_parse: expected '" + std::string(1, c) + "' in '" +
                                    std::string(s) + "'");
    ++i;
}

int parse_int(std::string_view s, size_t& i) {
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+'))
        ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
    if (start == i)
        throw std::invalid_argument("qm_parse: integer expected");
    return std::stoi(std::string(s.substr(start, i - start)));
}

}  // namespace

NCPoly qm_parse(AlgebraPtr algebra, std::string_view text) {
    if (algebra->kind() != AlgebraSpec::Kind::QuantumMatrix)
        throw std::invalid_argument("qm_parse: quantum-matrix algebra required");
    NCPoly out(algebra);
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip();
    if (text.substr(i) == "0")
        return out;
    const int ncols = algebra->qm_cols();
    while (i < text.size()) {
        skip();
        expect(text, i, '(');
        size_t close = text.find(')', i);
        if (close == std::string_view::npos)
            throw std::invalid_argument("qm_parse: unterminated coefficient");
        Laurent coeff = Laurent::parse(text.substr(i, close - i));
        i = close + 1;
        expect(text, i, '*');
        NormalMonomial mon = unit_monomial(*algebra);
        skip();
        if (i < text.size() && text[i] == '1') {
            ++i;
        } else {
            while (true) {
                expect(text, i, 'X');
                expect(text, i, '[');
                int r = parse_int(text, i);
                expect(text, i, ',');
                int c = parse_int(text, i);
                expect(text, i, ']');
                int e = 1;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    e = parse_int(text, i);
                }
                if (r < 1 || r > algebra->qm_rows() || c < 1 || c > ncols)
                    throw std::out_of_range("qm_parse: generator index out of range");
                mon.comps[0][(r - 1) * ncols + (c - 1)] += e;
                skip();
                if (i < text.size() && text[i] == '*') {
                    ++i;
                    skip();
                    continue;
                }
                break;
            }
        }
        out.add_term(mon, coeff);
        skip();
        if (i == text.size())
            break;
        expect(text, i, '+');
        skip();
    }
    return out;
}

}  // namespace qcoinv
