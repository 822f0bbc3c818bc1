#include "cedga/complex.hpp"
#include "cedga/error.hpp"

#include <algorithm>

namespace cedga {

std::size_t GradedComplex::dim(int k) const {
    auto it = basis.find(k);
    return it == basis.end() ? 0 : it->second.size();
}

Matrix GradedComplex::differential(int k) const {
    auto it = d.find(k);
    if (it != d.end())
        return it->second;
    return Matrix(p, dim(k - 1), dim(k));
}

int GradedComplex::min_degree() const { return basis.empty() ? 0 : basis.begin()->first; }
int GradedComplex::max_degree() const { return basis.empty() ? 0 : basis.rbegin()->first; }

void GradedComplex::check() const {
    for (const auto& [k, m] : d) {
        if (m.rows() != dim(k - 1) || m.cols() != dim(k) || m.characteristic() != p)
            throw Error(ErrorCode::InternalConsistency, "differential in degree " + std::to_string(k) + " has the wrong shape");
    }
    for (const auto& [k, m] : d) {
        if (dim(k - 1) == 0 || dim(k - 2) == 0)
            continue;
        if (!(differential(k - 1) * m).is_zero())
            throw Error(ErrorCode::InternalConsistency, "d^2 != 0 from degree " + std::to_string(k));
    }
}

Matrix ChainMap::at(int k) const {
    auto it = maps.find(k);
    if (it != maps.end())
        return it->second;
    return Matrix(target->p, target->dim(k), source->dim(k));
}

BettiVector dimensions(const GradedComplex& c) {
    BettiVector out;
    for (const auto& [k, b] : c.basis)
        if (!b.empty())
            out[k] = b.size();
    return out;
}

BettiVector betti(const GradedComplex& c) {
    BettiVector out;
    for (const auto& [k, b] : c.basis) {
        if (b.empty())
            continue;
        std::size_t h = b.size() - rank(c.differential(k)) - rank(c.differential(k + 1));
        if (h > 0)
            out[k] = h;
    }
    return out;
}

void check_chain_map(const ChainMap& psi) {
    if (!psi.source || !psi.target)
        throw Error(ErrorCode::NotChainMap, "chain map without source or target");
    if (psi.source->p != psi.target->p)
        throw Error(ErrorCode::RingMismatch, "chain map between complexes over different fields");
    for (const auto& [k, m] : psi.maps)
        if (m.rows() != psi.target->dim(k) || m.cols() != psi.source->dim(k))
            throw Error(ErrorCode::NotChainMap, "chain map has the wrong shape in degree " + std::to_string(k));
    int lo = std::min(psi.source->min_degree(), psi.target->min_degree());
    int hi = std::max(psi.source->max_degree(), psi.target->max_degree());
    for (int k = lo; k <= hi + 1; ++k) {
        if (psi.source->dim(k) == 0 || psi.target->dim(k - 1) == 0)
            continue;
        if (!(psi.target->differential(k) * psi.at(k) == psi.at(k - 1) * psi.source->differential(k)))
            throw Error(ErrorCode::NotChainMap, "chain map does not commute with the differentials in degree " +
                                                    std::to_string(k));
    }
}

GradedComplex mapping_cone(const ChainMap& psi) {
    check_chain_map(psi);
    const GradedComplex& S = *psi.source;
    const GradedComplex& T = *psi.target;
    GradedComplex C;
    C.p = T.p;
    int lo = std::min(T.min_degree(), S.min_degree() + 1);
    int hi = std::max(T.max_degree(), S.max_degree() + 1);
    for (int k = lo; k <= hi; ++k) {
        std::vector<std::string> b;
        if (auto it = T.basis.find(k); it != T.basis.end())
            b.insert(b.end(), it->second.begin(), it->second.end());
        if (auto it = S.basis.find(k - 1); it != S.basis.end())
            for (const auto& name : it->second)
                b.push_back(name + "[1]");
        if (!b.empty())
            C.basis[k] = std::move(b);
    }
    for (int k = lo; k <= hi; ++k) {
        std::size_t tk = T.dim(k), sk = S.dim(k - 1), tl = T.dim(k - 1), sl = S.dim(k - 2);
        if (tk + sk == 0 || tl + sl == 0)
            continue;
        Matrix m(C.p, tl + sl, tk + sk);
        Matrix dt = T.differential(k);
        Matrix ps = psi.at(k - 1);
        Matrix ds = -S.differential(k - 1);
        for (std::size_t i = 0; i < tl; ++i) {
            for (std::size_t j = 0; j < tk; ++j)
                m.at(i, j) = dt.at(i, j);
            for (std::size_t j = 0; j < sk; ++j)
                m.at(i, tk + j) = ps.at(i, j);
        }
        for (std::size_t i = 0; i < sl; ++i)
            for (std::size_t j = 0; j < sk; ++j)
                m.at(tl + i, tk + j) = ds.at(i, j);
        if (!m.is_zero())
            C.d[k] = std::move(m);
    }
    C.check();
    return C;
}

GradedComplex linearise(const DGA& a, const Augmentation& eps1, const Augmentation& eps2) {
    if (eps1.p != a.p || eps2.p != a.p || eps1.mu0 != eps2.mu0 || eps1.lambda0 != eps2.lambda0 ||
        eps1.values.size() != a.size() || eps2.values.size() != a.size())
        throw Error(ErrorCode::AugmentationMismatch, "augmentations are not compatible with each other and the DGA");
    if (!is_augmentation(a, eps1) || !is_augmentation(a, eps2))
        throw Error(ErrorCode::AugmentationMismatch, "not an augmentation of '" + a.name + "'");
    const PrimeField F(a.p);
    GradedComplex C;
    C.p = a.p;
    std::vector<std::size_t> pos(a.size());
    for (GenId g = 0; g < a.size(); ++g) {
        auto& b = C.basis[a.gens[g].degree];
        pos[g] = b.size();
        b.push_back(a.gens[g].name);
    }
    for (GenId x = 0; x < a.size(); ++x) {
        NCPoly dx = eval_coefficients(a.d[x], eps1.mu0, eps1.lambda0);
        const int k = a.gens[x].degree;
        for (const auto& [key, c] : dx.terms()) {
            const Word& w = key.word;
            for (std::size_t i = 0; i < w.size(); ++i) {
                Fp v = c;
                for (std::size_t j = 0; j < i && v != 0; ++j)
                    v = F.mul(v, eps1.values[w[j]]);
                for (std::size_t j = i + 1; j < w.size() && v != 0; ++j)
                    v = F.mul(v, eps2.values[w[j]]);
                if (v == 0)
                    continue;
                GenId y = w[i];
                if (a.gens[y].degree != k - 1)
                    throw Error(ErrorCode::Unsupported, "augmentations produce a component of d(" + a.gens[x].name +
                                                            ") outside degree -1; the complex is not graded");
                auto [it, inserted] = C.d.try_emplace(k, a.p, C.dim(k - 1), C.dim(k));
                Fp& entry = it->second.at(pos[y], pos[x]);
                entry = F.add(entry, v);
            }
        }
    }
    for (auto it = C.d.begin(); it != C.d.end();)
        it = it->second.is_zero() ? C.d.erase(it) : std::next(it);
    C.check();
    return C;
}

GradedComplex from_betti(std::uint32_t p, const BettiVector& dims, const std::string& prefix) {
    GradedComplex C;
    C.p = p;
    for (const auto& [k, n] : dims)
        for (std::size_t i = 0; i < n; ++i)
            C.basis[k].push_back(prefix + std::to_string(k) + "_" + std::to_string(i));
    return C;
}

} // namespace cedga
