#include "qcoinv/coact.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qcoinv {

Coaction Coaction::interior(int m, int n, int t) {
    if (t < 1 || t > std::min(m, n))
        throw std::invalid_argument("interior: 1 <= t <= min(m, n) required");
    Coaction c;
    c.kind = CoactionKind::Interior;
    c.m = m;
    c.n = n;
    c.t = t;
    c.carrier = AlgebraSpec::tensor(AlgebraSpec::quantum_matrix(m, t),
                                    AlgebraSpec::quantum_matrix(t, n));
    c.hopf = AlgebraSpec::quantum_matrix(t, t);
    return c;
}

Coaction Coaction::slr(int n, int r) {
    if (r < 1 || r >= n)
        throw std::invalid_argument("slr: positive r < n required");
    Coaction c;
    c.kind = CoactionKind::SLr;
    c.n = n;
    c.r = r;
    c.carrier = AlgebraSpec::quantum_matrix(n, r);
    c.hopf = AlgebraSpec::quantum_matrix(r, r);
    return c;
}

Coaction Coaction::conjugation(int n) {
    if (n < 1)
        throw std::invalid_argument("conjugation: n >= 1 required");
    Coaction c;
    c.kind = CoactionKind::Conjugation;
    c.n = n;
    c.carrier = AlgebraSpec::quantum_matrix(n, n);
    c.hopf = AlgebraSpec::quantum_matrix(n, n);
    return c;
}

namespace {

}  // namespace

NCPoly right_matrix_coaction(const NCPoly& a) {
    AlgebraPtr src = a.algebra();
    if (src->kind() != AlgebraSpec::Kind::QuantumMatrix)
        throw std::invalid_argument("right_matrix_coaction: quantum matrix element required");
    const int t = src->qm_cols();
    AlgebraPtr target = AlgebraSpec::tensor(src, AlgebraSpec::quantum_matrix(t, t));
    // X_ij -> sum_l X_il (carrier) (x) X_lj (hopf)
    std::vector<NCPoly> images;
    for (int g = 0; g < src->generator_count(); ++g) {
        const int i = g / t;
        const int j = g % t;
        NCPoly img(target);
        for (int l = 0; l < t; ++l) {
            NCPoly cgen = NCPoly::generator(target, target->global_generator(0, i * t + l));
            NCPoly hgen = NCPoly::generator(target, target->global_generator(1, l * t + j));
            img += cgen * hgen;
        }
        images.push_back(std::move(img));
    }
    return AlgebraHom(src, target, std::move(images), 2).apply(a);
}

NCPoly left_matrix_coaction(const NCPoly& b) {
    AlgebraPtr src = b.algebra();
    if (src->kind() != AlgebraSpec::Kind::QuantumMatrix)
        throw std::invalid_argument("left_matrix_coaction: quantum matrix element required");
    const int t = src->qm_rows();
    AlgebraPtr target = AlgebraSpec::tensor(AlgebraSpec::quantum_matrix(t, t), src);
    // X_ij -> sum_l X_il (hopf) (x) X_lj (carrier)
    std::vector<NCPoly> images;
    const int ncols = src->qm_cols();
    for (int g = 0; g < src->generator_count(); ++g) {
        const int i = g / ncols;
        const int j = g % ncols;
        NCPoly img(target);
        for (int l = 0; l < t; ++l) {
            NCPoly h = NCPoly::generator(target, target->global_generator(0, i * t + l));
            NCPoly c = NCPoly::generator(target, target->global_generator(1, l * ncols + j));
            img += h * c;
        }
        images.push_back(std::move(img));
    }
    return AlgebraHom(src, target, std::move(images), 2).apply(b);
}

namespace {

void cv_accumulate(CoactionValue& cv, const NormalMonomial& hmon, int detpow,
                   AlgebraPtr carrier, const NormalMonomial& wmon, const Laurent& c) {
    if (c.is_zero())
        return;
    auto key = std::make_pair(hmon, detpow);
    auto it = cv.terms.find(key);
    if (it == cv.terms.end())
        it = cv.terms.emplace(key, NCPoly(carrier)).first;
    it->second.add_term(wmon, c);
    if (it->second.is_zero())
        cv.terms.erase(it);
}

/// Memo for the hopf-side Sweedler products S(u1) * u3. One engine per solver
/// run; the public per-element operations use a throwaway instance.
struct SweedlerCache {
    std::map<NormalMonomial, NCPoly> antipode_num;
    std::map<std::pair<NormalMonomial, NormalMonomial>, NCPoly> product;

    const NCPoly& antipode_of(AlgebraPtr hopf, const NormalMonomial& mon) {
        auto it = antipode_num.find(mon);
        if (it == antipode_num.end())
            it = antipode_num.emplace(mon, antipode(NCPoly::monomial(hopf, mon)).num).first;
        return it->second;
    }

    const NCPoly& antipode_product(AlgebraPtr hopf, const NormalMonomial& u1,
                                   const NormalMonomial& u3) {
        auto key = std::make_pair(u1, u3);
        auto it = product.find(key);
        if (it == product.end()) {
            NCPoly p = antipode_of(hopf, u1) * NCPoly::monomial(hopf, u3);
            it = product.emplace(std::move(key), std::move(p)).first;
        }
        return it->second;
    }
};

CoactionValue interior_coaction_impl(const Coaction& c, const NCPoly& v, SweedlerCache& cache) {
    if (c.kind != CoactionKind::Interior)
        throw std::invalid_argument("interior_coaction: wrong coaction kind");
    if (!v.is_homogeneous())
        throw std::invalid_argument("interior_coaction: homogeneous input required");
    CoactionValue cv;
    cv.degree = v.homogeneous_degree();
    if (v.is_zero())
        return cv;
    AlgebraPtr left = AlgebraSpec::quantum_matrix(c.m, c.t);
    AlgebraPtr right = AlgebraSpec::quantum_matrix(c.t, c.n);

    for (const auto& [mon, coeff] : v.terms()) {
        NCPoly ma = NCPoly::monomial(left, NormalMonomial{{mon.comps[0]}});
        NCPoly mb = NCPoly::monomial(right, NormalMonomial{{mon.comps[1]}});
        const int dega = ma.is_zero() ? 0 : ma.homogeneous_degree();
        NCPoly rho = right_matrix_coaction(ma);   // sum a_0 (x) a_1
        NCPoly lam = left_matrix_coaction(mb);    // sum b_{-1} (x) b_0
        for (const auto& [rmon, rc] : rho.terms()) {
            // S(a_1) b_{-1} is an O_q(GL_t) element with det power = deg a.
            for (const auto& [lmon, lc] : lam.terms()) {
                const NCPoly& hopf_poly = cache.antipode_product(
                    c.hopf, NormalMonomial{{rmon.comps[1]}}, NormalMonomial{{lmon.comps[0]}});
                NormalMonomial w{{rmon.comps[0], lmon.comps[1]}};
                Laurent cc = coeff * rc * lc;
                for (const auto& [hm, hc] : hopf_poly.terms())
                    cv_accumulate(cv, hm, -dega, c.carrier, w, cc * hc);
            }
        }
    }
    return cv;
}

CoactionValue conjugation_coaction_impl(const Coaction& c, const NCPoly& u, SweedlerCache& cache) {
    if (c.kind != CoactionKind::Conjugation)
        throw std::invalid_argument("conjugation_coaction: wrong coaction kind");
    if (!u.is_homogeneous())
        throw std::invalid_argument("conjugation_coaction: homogeneous input required");
    CoactionValue cv;
    cv.degree = u.homogeneous_degree();
    if (u.is_zero())
        return cv;
    const int d = cv.degree;
    // beta(u) = sum u_2 (x) S(u_1) u_3, from the iterated coproduct of the full
    // element, never extended multiplicatively.
    NCPoly triple = comultiply_right_iterated(u);
    for (const auto& [mon, coeff] : triple.terms()) {
        const NCPoly& hopf_poly = cache.antipode_product(c.hopf, NormalMonomial{{mon.comps[0]}},
                                                         NormalMonomial{{mon.comps[2]}});
        const NormalMonomial u2{{mon.comps[1]}};
        for (const auto& [hm, hc] : hopf_poly.terms())
            cv_accumulate(cv, hm, -d, c.carrier, u2, coeff * hc);
    }
    return cv;
}

}  // namespace

CoactionValue interior_coaction(const Coaction& c, const NCPoly& v) {
    SweedlerCache cache;
    return interior_coaction_impl(c, v, cache);
}

CoactionValue conjugation_coaction(const Coaction& c, const NCPoly& u) {
    SweedlerCache cache;
    return conjugation_coaction_impl(c, u, cache);
}

NCPoly slr_coaction(const Coaction& c, const NCPoly& v) {
    if (c.kind != CoactionKind::SLr)
        throw std::invalid_argument("slr_coaction: wrong coaction kind");
    return right_matrix_coaction(v);
}

// ---------------------------------------------------------------------------
// Coinvariance systems

namespace {

struct RowIndexer {
    std::map<NormalMonomial, int> hopf_ids;
    std::map<std::pair<int, int>, int> rows;
    int next = 0;

    int at(const NormalMonomial& hmon, int widx) {
        auto [hit, hnew] = hopf_ids.try_emplace(hmon, static_cast<int>(hopf_ids.size()));
        auto [it, inserted] = rows.try_emplace({hit->second, widx}, next);
        if (inserted)
            ++next;
        return it->second;
    }
};

LaurentMatrix coinvariance_matrix_cleared(const Coaction& c, int d) {
    const std::vector<NormalMonomial> basis = graded_basis(*c.carrier, d);
    std::map<NormalMonomial, int> index;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i)
        index.emplace(basis[i], i);

    std::vector<NCPoly> detpow;  // det^k expansions, k = 0..d
    detpow.push_back(NCPoly::one(c.hopf));
    NCPoly det = quantum_det(c.hopf);
    for (int k = 1; k <= d; ++k)
        detpow.push_back(detpow.back() * det);

    RowIndexer rows;
    std::vector<std::map<int, Laurent>> cols(basis.size());
    SweedlerCache cache;
    std::map<std::pair<NormalMonomial, int>, NCPoly> cleared_cache;

    for (int u = 0; u < static_cast<int>(basis.size()); ++u) {
        NCPoly mono = NCPoly::monomial(c.carrier, basis[u]);
        CoactionValue cv = c.kind == CoactionKind::Interior
                               ? interior_coaction_impl(c, mono, cache)
                               : conjugation_coaction_impl(c, mono, cache);
        for (const auto& [key, carrier_elt] : cv.terms) {
            const auto& [hmon, p] = key;
            // Clear to det^d: multiply the hopf monomial by det^(d + p).
            auto cit = cleared_cache.find(key);
            if (cit == cleared_cache.end())
                cit = cleared_cache.emplace(key, NCPoly::monomial(c.hopf, hmon) * detpow[d + p])
                          .first;
            const NCPoly& cleared = cit->second;
            for (const auto& [hm, hc] : cleared.terms()) {
                for (const auto& [wmon, wc] : carrier_elt.terms()) {
                    int r = rows.at(hm, index.at(wmon));
                    auto& slot = cols[u][r];
                    slot += hc * wc;
                }
            }
        }
        // Unit side: subtract det^d (x) u.
        for (const auto& [hm, hc] : detpow[d].terms()) {
            int r = rows.at(hm, u);
            auto& slot = cols[u][r];
            slot -= hc;
        }
    }

    LaurentMatrix m(rows.next, static_cast<int>(basis.size()));
    for (int u = 0; u < static_cast<int>(basis.size()); ++u)
        for (const auto& [r, val] : cols[u])
            if (!val.is_zero())
                m.add(r, u, val);
    return m;
}

/// The slr condition: rho(v) - v (x) 1 must lie in carrier (x) (det-1) * H_{<= d-r},
/// checked after reducing the hopf side modulo that subspace within the
/// degree-<= d filtration. When `at` is set, the whole system (including the
/// subspace echelon driving the reduction) is assembled over Q at q = at; the
/// generic echelon's pivot structure need not survive specialization, so
/// specializing the assembled generic matrix would not be faithful.
LaurentMatrix coinvariance_matrix_slr(const Coaction& c, int d, const Rational* at) {
    const std::vector<NormalMonomial> basis = graded_basis(*c.carrier, d);
    std::map<NormalMonomial, int> index;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i)
        index.emplace(basis[i], i);

    // Filtered hopf basis, degrees 0..d.
    std::vector<NormalMonomial> filtered;
    for (int k = 0; k <= d; ++k) {
        auto b = graded_basis(*c.hopf, k);
        filtered.insert(filtered.end(), b.begin(), b.end());
    }
    std::map<NormalMonomial, int> hindex;
    for (int i = 0; i < static_cast<int>(filtered.size()); ++i)
        hindex.emplace(filtered[i], i);
    const int H = static_cast<int>(filtered.size());

    // Echelon of the (det-1)-multiples subspace.
    auto maybe_specialize = [&](const Laurent& v) {
        return at ? Laurent(v.eval_at(*at)) : v;
    };
    NCPoly det_minus_one = quantum_det(c.hopf) - NCPoly::one(c.hopf);
    LaurentMatrix sub(0, H);
    for (int k = 0; k + c.r <= d; ++k) {
        for (const NormalMonomial& mmon : graded_basis(*c.hopf, k)) {
            NCPoly w = det_minus_one * NCPoly::monomial(c.hopf, mmon);
            SparseVec row;
            for (const auto& [hm, hc] : w.terms()) {
                Laurent v = maybe_specialize(hc);
                if (!v.is_zero())
                    row.emplace_back(hindex.at(hm), std::move(v));
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            sub.append_row(std::move(row));
        }
    }
    // Forward echelon (no content stripping: the projection below must stay a
    // single fixed linear map).
    std::vector<SparseVec> pivots;
    {
        std::map<int, std::vector<SparseVec>> buckets;
        for (int r = 0; r < sub.rows(); ++r)
            if (!sub.row(r).empty())
                buckets[sub.row(r)[0].first].push_back(sub.row(r));
        while (!buckets.empty()) {
            auto it = buckets.begin();
            std::vector<SparseVec> rs = std::move(it->second);
            buckets.erase(it);
            SparseVec piv = std::move(rs[0]);
            for (size_t k = 1; k < rs.size(); ++k) {
                SparseVec& row = rs[k];
                // row <- piv0 * row - row0 * piv
                const Laurent a = row[0].second;
                const Laurent p = piv[0].second;
                SparseVec out;
                auto i2 = row.begin();
                auto j2 = piv.begin();
                while (i2 != row.end() && j2 != piv.end()) {
                    if (i2->first < j2->first) {
                        out.emplace_back(i2->first, p * i2->second);
                        ++i2;
                    } else if (j2->first < i2->first) {
                        out.emplace_back(j2->first, -(a * j2->second));
                        ++j2;
                    } else {
                        Laurent v = p * i2->second - a * j2->second;
                        if (!v.is_zero())
                            out.emplace_back(i2->first, std::move(v));
                        ++i2;
                        ++j2;
                    }
                }
                for (; i2 != row.end(); ++i2)
                    out.emplace_back(i2->first, p * i2->second);
                for (; j2 != piv.end(); ++j2)
                    out.emplace_back(j2->first, -(a * j2->second));
                if (!out.empty())
                    buckets[out[0].first].push_back(std::move(out));
            }
            pivots.push_back(std::move(piv));
        }
    }

    // P(e_h): reduce each filtered unit vector by every pivot unconditionally,
    // so the projection is one fixed linear map across all columns.
    auto reduce = [&](std::vector<Laurent> v) {
        for (const SparseVec& piv : pivots) {
            const int pc = piv[0].first;
            const Laurent& pv = piv[0].second;
            Laurent coef = v[pc];
            for (auto& x : v)
                x *= pv;
            if (!coef.is_zero())
                for (const auto& [cc, cvv] : piv)
                    v[cc] -= coef * cvv;
        }
        return v;
    };
    std::vector<std::vector<Laurent>> projected(H);
    for (int h = 0; h < H; ++h) {
        std::vector<Laurent> e(H);
        e[h] = Laurent::one();
        projected[h] = reduce(std::move(e));
    }

    RowIndexer rows;
    std::vector<std::map<int, Laurent>> cols(basis.size());
    const int unit_h = hindex.at(unit_monomial(*c.hopf));

    for (int u = 0; u < static_cast<int>(basis.size()); ++u) {
        NCPoly img = slr_coaction(c, NCPoly::monomial(c.carrier, basis[u]));
        // Collect per-carrier-monomial hopf vectors, reduce, emit rows.
        std::map<int, std::vector<Laurent>> per_w;
        for (const auto& [mon, raw_cc] : img.terms()) {
            Laurent cc = maybe_specialize(raw_cc);
            if (cc.is_zero())
                continue;
            int w = index.at(NormalMonomial{{mon.comps[0]}});
            int h = hindex.at(NormalMonomial{{mon.comps[1]}});
            auto [it, inserted] = per_w.try_emplace(w, std::vector<Laurent>(H));
            const std::vector<Laurent>& ph = projected[h];
            for (int k = 0; k < H; ++k)
                if (!ph[k].is_zero())
                    it->second[k] += cc * ph[k];
        }
        {
            auto [it, inserted] = per_w.try_emplace(u, std::vector<Laurent>(H));
            const std::vector<Laurent>& pu = projected[unit_h];
            for (int k = 0; k < H; ++k)
                if (!pu[k].is_zero())
                    it->second[k] -= pu[k];
        }
        for (const auto& [w, vec] : per_w)
            for (int k = 0; k < H; ++k)
                if (!vec[k].is_zero()) {
                    int r = rows.at(filtered[k], w);
                    cols[u][r] += vec[k];
                }
    }

    LaurentMatrix m(rows.next, static_cast<int>(basis.size()));
    for (int u = 0; u < static_cast<int>(basis.size()); ++u)
        for (const auto& [r, val] : cols[u])
            if (!val.is_zero())
                m.add(r, u, val);
    return m;
}

}  // namespace

LaurentMatrix coinvariance_matrix(const Coaction& c, int d) {
    if (d < 0)
        throw std::invalid_argument("coinvariance_matrix: d >= 0 required");
    if (c.kind == CoactionKind::SLr)
        return coinvariance_matrix_slr(c, d, nullptr);
    return coinvariance_matrix_cleared(c, d);
}

LaurentMatrix coinvariance_matrix_at(const Coaction& c, int d, const Rational& lambda) {
    if (d < 0)
        throw std::invalid_argument("coinvariance_matrix_at: d >= 0 required");
    if (lambda.is_zero())
        throw std::domain_error("coinvariance_matrix_at: lambda must be nonzero");
    if (c.kind == CoactionKind::SLr)
        return coinvariance_matrix_slr(c, d, &lambda);
    return specialize_matrix(coinvariance_matrix_cleared(c, d), lambda);
}

std::vector<std::vector<Laurent>> coinvariant_basis(const Coaction& c, int d) {
    return kernel_basis(coinvariance_matrix(c, d));
}

NCPoly quantum_trace(int n, int i) {
    if (i < 1 || i > n)
        throw std::out_of_range("quantum_trace: 1 <= i <= n required");
    AlgebraPtr a = AlgebraSpec::quantum_matrix(n, n);
    NCPoly out(a);
    std::vector<int> subset(i);
    // Iterate i-element subsets of {1..n} in lexicographic order.
    for (int k = 0; k < i; ++k)
        subset[k] = k + 1;
    while (true) {
        int w = 0;
        for (int x : subset)
            w += x;
        out += quantum_minor(a, subset, subset).scaled(Laurent::q(-2 * w));
        int k = i - 1;
        while (k >= 0 && subset[k] == n - (i - 1 - k))
            --k;
        if (k < 0)
            break;
        ++subset[k];
        for (int j = k + 1; j < i; ++j)
            subset[j] = subset[j - 1] + 1;
    }
    return out;
}

}  // namespace qcoinv
