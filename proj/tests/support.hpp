#pragma once

#include "cedga/catalog.hpp"
#include "cedga/complex.hpp"
#include "cedga/dga.hpp"
#include "cedga/spun.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing_support {

using namespace cedga;

inline std::string data_path(const std::string& file) { return std::string(CEDGA_TEST_DATA_DIR) + "/" + file; }

/// d(x) = yz over F_p, lengths 3, 1, 1.
inline DGA toy_dga(std::uint32_t p = 2) {
    DGA a;
    a.p = p;
    a.name = "toy";
    GenId x = a.add_generator({"x", 1, Rational(3)});
    GenId y = a.add_generator({"y", 0, Rational(1)});
    GenId z = a.add_generator({"z", 0, Rational(1)});
    a.d[x] = NCPoly::monomial(p, {y, z});
    return a;
}

/// d(a) = 1 + mu, built by hand.
inline DGA unknot_model(std::uint32_t p = 2) {
    DGA a;
    a.p = p;
    a.name = "unknot-model";
    GenId g = a.add_generator({"a", 1, Rational(1)});
    a.d[g] = NCPoly::unit(p) + NCPoly::constant(p, 1, 1);
    return a;
}

/// c (deg 0, len 3), e (deg 1, len 1), f (deg 0, len 1/4) with d(e) = f.
/// K(c) = e is length-filtered and gives the loop c -> c + f.
inline DGA filtered_model(std::uint32_t p = 2) {
    DGA a;
    a.p = p;
    a.name = "filtered";
    GenId c = a.add_generator({"c", 0, Rational(3)});
    GenId e = a.add_generator({"e", 1, Rational(1)});
    GenId f = a.add_generator({"f", 0, Rational(1, 4)});
    (void)c;
    a.d[e] = a.gen(f);
    return a;
}

/// All words over the generators with the given total degree and at most max_len letters.
inline std::vector<Word> words_of_degree(const DGA& a, int degree, std::size_t max_len) {
    std::vector<Word> out;
    std::vector<Word> frontier{Word{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const Word& w : frontier)
            for (GenId g = 0; g < a.size(); ++g) {
                Word v = w;
                v.push_back(g);
                next.push_back(v);
            }
        for (const Word& w : next)
            if (a.word_degree(w) == degree)
                out.push_back(w);
        frontier = std::move(next);
    }
    return out;
}

/// Elementary homotopy: K is a single monomial of degree |g| + 1 on one random generator g.
inline std::vector<NCPoly> random_homotopy(const DGA& a, std::mt19937_64& rng, std::size_t max_len = 2) {
    std::vector<NCPoly> K(a.size(), NCPoly(a.p));
    std::uniform_int_distribution<GenId> which(0, static_cast<GenId>(a.size() - 1));
    GenId g = which(rng);
    auto pool = words_of_degree(a, a.gens[g].degree + 1, max_len);
    if (pool.empty())
        return K;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> coef(1, static_cast<int>(a.p) - 1), mu(-1, 1);
    K[g].add_term(Word(pool[pick(rng)]), {static_cast<Fp>(coef(rng)), mu(rng), 0});
    return K;
}

inline std::size_t total_terms(const std::vector<NCPoly>& images) {
    std::size_t n = 0;
    for (const auto& x : images)
        n += x.size();
    return n;
}

/// Composition of up to three elementary homotopy endomorphisms, stopping
/// early once the images grow past a few hundred terms.
inline DGAMorphism random_endomorphism(const DGA& a, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(1, 3);
    DGAMorphism phi = homotopy_endomorphism(a, random_homotopy(a, rng));
    for (int i = count(rng) - 1; i > 0 && total_terms(phi.images) < 200; --i)
        phi = compose(homotopy_endomorphism(a, random_homotopy(a, rng)), phi);
    return phi;
}

/// Random complex with dims in [0, max_dim] on degrees [lo, hi]; d_k = (kernel basis of d_{k-1}) * random.
inline GradedComplex random_complex(std::uint32_t p, int lo, int hi, std::size_t max_dim, std::mt19937_64& rng,
                                    const std::string& prefix) {
    std::uniform_int_distribution<std::size_t> dim(0, max_dim);
    std::uniform_int_distribution<Fp> val(0, p - 1);
    BettiVector dims;
    for (int k = lo; k <= hi; ++k)
        dims[k] = dim(rng);
    GradedComplex C = from_betti(p, dims, prefix);
    for (int k = lo + 1; k <= hi; ++k) {
        Matrix below = C.differential(k - 1);
        Matrix ker = nullspace(below);
        Matrix coeffs(p, ker.cols(), C.dim(k));
        for (std::size_t i = 0; i < coeffs.rows(); ++i)
            for (std::size_t j = 0; j < coeffs.cols(); ++j)
                coeffs.at(i, j) = val(rng);
        Matrix dk = ker * coeffs;
        if (dk.rows() == C.dim(k - 1) && dk.cols() == C.dim(k) && !dk.is_zero())
            C.d[k] = dk;
    }
    return C;
}

/// Random chain map: a random vector in the kernel of psi -> d_T psi - psi d_S.
inline ChainMap random_chain_map(const GradedComplex& S, const GradedComplex& T, std::mt19937_64& rng) {
    const std::uint32_t p = S.p;
    int lo = std::min(S.min_degree(), T.min_degree());
    int hi = std::max(S.max_degree(), T.max_degree());
    std::vector<std::pair<int, std::size_t>> blocks;
    std::size_t unknowns = 0;
    std::map<int, std::size_t> offset;
    for (int k = lo; k <= hi; ++k) {
        offset[k] = unknowns;
        unknowns += T.dim(k) * S.dim(k);
    }
    std::vector<std::vector<Fp>> rows;
    const PrimeField F(p);
    for (int k = lo; k <= hi + 1; ++k) {
        Matrix dT = T.differential(k), dS = S.differential(k);
        for (std::size_t i = 0; i < T.dim(k - 1); ++i)
            for (std::size_t j = 0; j < S.dim(k); ++j) {
                std::vector<Fp> row(unknowns, 0);
                for (std::size_t m = 0; m < T.dim(k); ++m)
                    if (offset.count(k))
                        row[offset[k] + m * S.dim(k) + j] = F.add(row[offset[k] + m * S.dim(k) + j], dT.at(i, m));
                for (std::size_t m = 0; m < S.dim(k - 1); ++m)
                    if (offset.count(k - 1))
                        row[offset[k - 1] + i * S.dim(k - 1) + m] =
                            F.sub(row[offset[k - 1] + i * S.dim(k - 1) + m], dS.at(m, j));
                rows.push_back(std::move(row));
            }
    }
    Matrix sys(p, rows.size(), unknowns);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < unknowns; ++j)
            sys.at(i, j) = rows[i][j];
    Matrix ker = nullspace(sys);
    std::vector<Fp> sol(unknowns, 0);
    std::uniform_int_distribution<Fp> val(0, p - 1);
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        Fp w = val(rng);
        for (std::size_t r = 0; r < unknowns; ++r)
            sol[r] = F.add(sol[r], F.mul(w, ker.at(r, c)));
    }
    ChainMap psi{&S, &T, {}};
    for (int k = lo; k <= hi; ++k) {
        if (T.dim(k) * S.dim(k) == 0)
            continue;
        Matrix m(p, T.dim(k), S.dim(k));
        for (std::size_t i = 0; i < T.dim(k); ++i)
            for (std::size_t j = 0; j < S.dim(k); ++j)
                m.at(i, j) = sol[offset[k] + i * S.dim(k) + j];
        psi.maps[k] = m;
    }
    return psi;
}

/// Plain Gaussian elimination, kept separate from the library kernels.
inline std::size_t oracle_rank(const Matrix& m) {
    const std::uint32_t p = m.characteristic();
    std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            a[i][j] = m.at(i, j);
    auto inv = [&](std::int64_t x) {
        for (std::int64_t y = 1; y < p; ++y)
            if (x * y % p == 1)
                return y;
        return std::int64_t{0};
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && a[piv][c] == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        std::swap(a[piv], a[r]);
        std::int64_t s = inv(a[r][c]);
        for (auto& v : a[r])
            v = v * s % p;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && a[i][c] != 0) {
                std::int64_t f = a[i][c];
                for (std::size_t j = 0; j < m.cols(); ++j)
                    a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
            }
        ++r;
    }
    return r;
}

inline std::size_t oracle_betti(const GradedComplex& c, int k) {
    return c.dim(k) - oracle_rank(c.differential(k)) - oracle_rank(c.differential(k + 1));
}

/// Rank of psi_* : H_k(S) -> H_k(T) = rank [psi Z_k | B_k] - rank B_k.
inline std::size_t induced_rank(const ChainMap& psi, int k) {
    const GradedComplex& S = *psi.source;
    const GradedComplex& T = *psi.target;
    if (S.dim(k) == 0 || T.dim(k) == 0)
        return 0;
    Matrix cycles = nullspace(S.differential(k));
    Matrix image = psi.at(k) * cycles;
    Matrix bounds = T.differential(k + 1);
    return oracle_rank(hconcat(image, bounds)) - oracle_rank(bounds);
}

} // namespace testing_support
