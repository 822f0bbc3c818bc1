#include "cedga/variety.hpp"
#include "cedga/error.hpp"

#include <algorithm>
#include <cctype>
#include <exception>
#include <sstream>

namespace cedga {

namespace {

void require_odd_prime(std::uint32_t q) {
    if (q < 3 || !is_prime(q))
        throw Error(ErrorCode::Unsupported, "q must be an odd prime, got " + std::to_string(q));
}

} // namespace

LocusPolynomial LocusPolynomial::parse(const std::string& text) {
    LocusPolynomial f;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto fail = [&](const std::string& why) {
        throw Error(ErrorCode::Format, "polynomial '" + text + "': " + why);
    };
    auto number = [&]() -> long long {
        skip();
        bool neg = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
            neg = text[i] == '-';
            ++i;
        }
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (start == i)
            fail("expected a number at position " + std::to_string(start));
        long long v = std::stoll(text.substr(start, i - start));
        return neg ? -v : v;
    };
    skip();
    if (i == text.size())
        fail("empty");
    int sign = 1;
    while (true) {
        skip();
        long long c = number() * sign;
        skip();
        if (i >= text.size() || text[i] != '[')
            fail("expected '[' after coefficient");
        ++i;
        long long mu = number();
        skip();
        if (i >= text.size() || text[i] != ',')
            fail("expected ','");
        ++i;
        long long lambda = number();
        skip();
        if (i >= text.size() || text[i] != ']')
            fail("expected ']'");
        ++i;
        auto& slot = f.terms[{static_cast<int>(mu), static_cast<int>(lambda)}];
        slot += c;
        if (slot == 0)
            f.terms.erase({static_cast<int>(mu), static_cast<int>(lambda)});
        skip();
        if (i == text.size())
            break;
        if (text[i] == '+')
            sign = 1;
        else if (text[i] == '-')
            sign = -1;
        else
            fail("expected '+' or '-'");
        ++i;
    }
    if (f.terms.empty())
        throw Error(ErrorCode::Format, "polynomial '" + text + "' is identically zero");
    return f;
}

std::string LocusPolynomial::to_string() const {
    if (terms.empty())
        return "0[0,0]";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (first)
            os << c;
        else
            os << (c < 0 ? " - " : " + ") << (c < 0 ? -c : c);
        os << "[" << e.first << "," << e.second << "]";
        first = false;
    }
    return os.str();
}

Fp LocusPolynomial::evaluate(const PrimeField& F, Fp mu0, Fp lambda0) const {
    Fp s = 0;
    for (const auto& [e, c] : terms)
        s = F.add(s, F.mul(F.from_int(c), F.mul(F.pow(mu0, e.first), F.pow(lambda0, e.second))));
    return s;
}

LocusPolynomial operator*(const LocusPolynomial& a, const LocusPolynomial& b) {
    LocusPolynomial r;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            std::pair<int, int> e{ea.first + eb.first, ea.second + eb.second};
            r.terms[e] += ca * cb;
            if (r.terms[e] == 0)
                r.terms.erase(e);
        }
    return r;
}

TorusPointSet polynomial_locus(const LocusPolynomial& f, std::uint32_t q) {
    require_odd_prime(q);
    const PrimeField F(q);
    std::vector<std::vector<TorusPoint>> rows(q);
    const auto n = static_cast<std::ptrdiff_t>(q);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t m = 1; m < n; ++m)
        for (Fp l = 1; l < q; ++l)
            if (f.evaluate(F, static_cast<Fp>(m), l) == 0)
                rows[m].emplace_back(static_cast<Fp>(m), l);
    TorusPointSet s{q, {}, "polynomial " + f.to_string()};
    for (const auto& r : rows)
        s.points.insert(s.points.end(), r.begin(), r.end());
    return s;
}

TorusPointSet polynomial_locus_serial(const LocusPolynomial& f, std::uint32_t q) {
    require_odd_prime(q);
    const PrimeField F(q);
    TorusPointSet s{q, {}, "polynomial " + f.to_string()};
    for (Fp m = 1; m < q; ++m)
        for (Fp l = 1; l < q; ++l)
            if (f.evaluate(F, m, l) == 0)
                s.points.emplace_back(m, l);
    return s;
}

TorusPointSet augmentation_points(const DGA& a, std::uint32_t q, bool graded, std::uint64_t bound) {
    if (a.p != q)
        throw Error(ErrorCode::RingMismatch, "DGA '" + a.name + "' is over F_" + std::to_string(a.p) + ", not F_" +
                                                 std::to_string(q));
    std::vector<std::vector<TorusPoint>> rows(q);
    std::exception_ptr failure;
    const auto n = static_cast<std::ptrdiff_t>(q);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t m = 1; m < n; ++m) {
        try {
            for (Fp l = 1; l < q; ++l)
                if (has_augmentation(a, static_cast<Fp>(m), l, graded, bound))
                    rows[m].emplace_back(static_cast<Fp>(m), l);
        } catch (...) {
#pragma omp critical
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    TorusPointSet s{q, {}, "augmentations of " + a.name};
    for (const auto& r : rows)
        s.points.insert(s.points.end(), r.begin(), r.end());
    return s;
}

TorusPointSet augmentation_points_serial(const DGA& a, std::uint32_t q, bool graded, std::uint64_t bound) {
    if (a.p != q)
        throw Error(ErrorCode::RingMismatch, "DGA '" + a.name + "' is over F_" + std::to_string(a.p) + ", not F_" +
                                                 std::to_string(q));
    TorusPointSet s{q, {}, "augmentations of " + a.name};
    for (Fp m = 1; m < q; ++m)
        for (Fp l = 1; l < q; ++l)
            if (!find_augmentations_serial(a, q, m, l, graded, bound).empty())
                s.points.emplace_back(m, l);
    return s;
}

const char* to_string(Containment c) {
    switch (c) {
    case Containment::Contained: return "contained";
    case Containment::NotContained: return "not-contained";
    case Containment::Empty: return "empty";
    }
    return "unknown";
}

ContainmentResult line_containment(const TorusPointSet& s) {
    if (s.points.empty())
        return {Containment::Empty, std::nullopt};
    const Fp minus_one = s.q - 1;
    for (const auto& pt : s.points)
        if (pt.first != minus_one)
            return {Containment::NotContained, pt};
    return {Containment::Contained, std::nullopt};
}

TorusPointSet intersect_line(const TorusPointSet& s) {
    TorusPointSet out{s.q, {}, s.provenance + " on mu = -1"};
    for (const auto& pt : s.points)
        if (pt.first == s.q - 1)
            out.points.push_back(pt);
    return out;
}

TorusPointSet change_basis(const TorusPointSet& s, const BasisChange& m) {
    const PrimeField F(s.q);
    TorusPointSet out{s.q, {}, s.provenance};
    for (const auto& [mu, la] : s.points)
        out.points.emplace_back(F.mul(F.pow(mu, m[0]), F.pow(la, m[1])), F.mul(F.pow(mu, m[2]), F.pow(la, m[3])));
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    return out;
}

BasisScan scan_basis_changes(const TorusPointSet& s, int bound) {
    BasisScan scan;
    if (bound >= 1 && line_containment(s).verdict == Containment::Contained)
        scan.containing = BasisChange{1, 0, 0, 1};
    for (int a = -bound; a <= bound; ++a)
        for (int b = -bound; b <= bound; ++b)
            for (int c = -bound; c <= bound; ++c)
                for (int d = -bound; d <= bound; ++d) {
                    int det = a * d - b * c;
                    if (det != 1 && det != -1)
                        continue;
                    ++scan.matrices_tried;
                    if (scan.containing)
                        continue;
                    if (line_containment(change_basis(s, {a, b, c, d})).verdict == Containment::Contained)
                        scan.containing = BasisChange{a, b, c, d};
                }
    return scan;
}

} // namespace cedga
