#include "cedga/ncpoly.hpp"
#include "cedga/error.hpp"

#include <limits>
#include <string>

namespace cedga {

NCPoly NCPoly::constant(std::uint32_t p, std::int64_t c, std::int32_t mu, std::int32_t lambda) {
    return monomial(p, Word{}, c, mu, lambda);
}

NCPoly NCPoly::monomial(std::uint32_t p, Word w, std::int64_t c, std::int32_t mu, std::int32_t lambda) {
    NCPoly r(p);
    r.add_term(std::move(w), r.field_.from_int(c), mu, lambda);
    return r;
}

void NCPoly::add_term(const Word& w, const CoefMonomial& m) {
    add_term(Word(w), m.c, m.mu, m.lambda);
}

void NCPoly::add_term(Word&& w, Fp c, std::int32_t mu, std::int32_t lambda) {
    c %= field_.characteristic();
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(TermKey{std::move(w), mu, lambda}, c);
    if (inserted)
        return;
    it->second = field_.add(it->second, c);
    if (it->second == 0)
        terms_.erase(it);
}

std::vector<CoefMonomial> NCPoly::coefficient(const Word& w) const {
    std::vector<CoefMonomial> out;
    auto it = terms_.lower_bound(TermKey{w, std::numeric_limits<std::int32_t>::min(), std::numeric_limits<std::int32_t>::min()});
    for (; it != terms_.end() && it->first.word == w; ++it)
        out.push_back({it->second, it->first.mu, it->first.lambda});
    return out;
}

std::vector<Word> NCPoly::words() const {
    std::vector<Word> out;
    for (const auto& [key, c] : terms_)
        if (out.empty() || out.back() != key.word)
            out.push_back(key.word);
    return out;
}

void NCPoly::require_same_ring(const NCPoly& o) const {
    if (characteristic() != o.characteristic())
        throw Error(ErrorCode::RingMismatch, "characteristic " + std::to_string(characteristic()) + " vs " +
                                                 std::to_string(o.characteristic()));
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    require_same_ring(o);
    for (const auto& [key, c] : o.terms_)
        add_term(Word(key.word), c, key.mu, key.lambda);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    require_same_ring(o);
    for (const auto& [key, c] : o.terms_)
        add_term(Word(key.word), field_.neg(c), key.mu, key.lambda);
    return *this;
}

NCPoly NCPoly::scaled(const CoefMonomial& m) const {
    NCPoly r(characteristic());
    Fp c = m.c % characteristic();
    if (c == 0)
        return r;
    for (const auto& [key, v] : terms_)
        r.terms_.emplace(TermKey{key.word, key.mu + m.mu, key.lambda + m.lambda}, field_.mul(v, c));
    return r;
}

NCPoly NCPoly::operator-() const {
    return scaled({field_.minus_one(), 0, 0});
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    a.require_same_ring(b);
    NCPoly r(a.characteristic());
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            Word w;
            w.reserve(ka.word.size() + kb.word.size());
            w.insert(w.end(), ka.word.begin(), ka.word.end());
            w.insert(w.end(), kb.word.begin(), kb.word.end());
            r.add_term(std::move(w), a.field_.mul(ca, cb), ka.mu + kb.mu, ka.lambda + kb.lambda);
        }
    }
    return r;
}

NCPoly normalize(const NCPoly& p) {
    NCPoly r(p.characteristic());
    for (const auto& [key, c] : p.terms())
        r.add_term(Word(key.word), c, key.mu, key.lambda);
    return r;
}

} // namespace cedga
