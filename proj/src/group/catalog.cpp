#include "plocal/catalog.hpp"

#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>

#include "plocal/galois.hpp"
#include "plocal/group_ops.hpp"

namespace plocal::catalog {

namespace {

FiniteGroup formula_group(std::size_t n, const std::function<Elem(Elem, Elem)>& mul,
                          const std::function<Elem(Elem)>& inv, std::vector<Elem> gens, std::string label) {
    const Bounds& b = Bounds::defaults();
    if (n <= b.max_table_order) {
        std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y) t[x][y] = mul(x, y);
        Bounds nb = b;
        nb.assoc_full_check_order = 0;
        return FiniteGroup::from_table(t, std::move(label), nb);
    }
    return FiniteGroup::from_rule(n, mul, inv, std::move(gens), std::move(label));
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = r * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return r;
}

std::vector<Point> mobius_perm(const GaloisField& F, const std::function<std::uint32_t(std::uint32_t)>& f) {
    std::vector<Point> img(F.size() + 1);
    for (std::uint32_t x = 0; x <= F.size(); ++x) img[x] = f(x);
    return img;
}

}  // namespace

FiniteGroup cyclic(std::size_t n) {
    if (n == 0) fail(ErrorCode::invalid_argument, "cyclic group of order 0");
    std::vector<Elem> gens;
    if (n > 1) gens.push_back(1);
    return formula_group(
        n, [n](Elem a, Elem b) { return Elem((a + b) % n); }, [n](Elem a) { return Elem((n - a) % n); }, gens,
        "C" + std::to_string(n));
}

FiniteGroup metacyclic(std::size_t m, std::size_t r, std::size_t s, std::string label) {
    if (m == 0 || s == 0) fail(ErrorCode::invalid_argument, "metacyclic parameters must be positive");
    if (std::gcd(r % m, m) != 1 % m && m > 1) fail(ErrorCode::invalid_argument, "r must be a unit mod m");
    if (powmod(r, s, m) != 1 % m) fail(ErrorCode::invalid_argument, "r^s must be 1 mod m");
    std::vector<std::uint64_t> rp(s);
    for (std::size_t j = 0; j < s; ++j) rp[j] = powmod(r, j, m);
    auto mul = [m, s, rp](Elem x, Elem y) {
        std::uint64_t i = x % m, j = x / m, k = y % m, l = y / m;
        return Elem((i + rp[j] * k) % m + m * ((j + l) % s));
    };
    auto inv = [m, s, rp](Elem x) {
        std::uint64_t i = x % m, j = x / m;
        std::uint64_t jj = (s - j) % s;
        std::uint64_t ii = (m - (rp[jj] * i) % m) % m;
        return Elem(ii + m * jj);
    };
    std::vector<Elem> gens;
    if (m > 1) gens.push_back(1);
    if (s > 1) gens.push_back(Elem(m));
    if (label.empty()) label = "C" + std::to_string(m) + ":C" + std::to_string(s);
    return formula_group(m * s, mul, inv, gens, label);
}

FiniteGroup dihedral(std::size_t order) {
    if (order % 2 != 0 || order == 0) fail(ErrorCode::invalid_argument, "dihedral order must be even");
    const std::size_t n = order / 2;
    return metacyclic(n, n == 1 ? 0 : n - 1, 2, "D" + std::to_string(order));
}

FiniteGroup dicyclic(std::size_t order) {
    if (order % 4 != 0 || order < 4) fail(ErrorCode::invalid_argument, "dicyclic order must be a multiple of 4");
    const std::size_t m = order / 4, n2 = 2 * m;
    auto mul = [m, n2](Elem x, Elem y) {
        std::size_t i = x % n2, j = x / n2, k = y % n2, l = y / n2;
        std::size_t ii = (i + (j ? n2 - k : k)) % n2;
        std::size_t jj = j + l;
        if (jj == 2) {
            jj = 0;
            ii = (ii + m) % n2;
        }
        return Elem(ii + n2 * jj);
    };
    auto inv = [m, n2](Elem x) {
        std::size_t i = x % n2, j = x / n2;
        if (j == 0) return Elem((n2 - i) % n2);
        return Elem((i + m) % n2 + n2);
    };
    std::string label = order == 8 ? "Q8" : (order == 16 ? "Q16" : "Dic" + std::to_string(order));
    return formula_group(order, mul, inv, {1, Elem(n2)}, label);
}

FiniteGroup semidihedral(std::size_t order) {
    auto p = prime_of_power(order);
    if (!p || *p != 2 || order < 16) fail(ErrorCode::invalid_argument, "semidihedral order must be 2^n, n >= 4");
    return metacyclic(order / 2, order / 4 - 1, 2, "SD" + std::to_string(order));
}

FiniteGroup modular(std::size_t order) {
    auto p = prime_of_power(order);
    if (!p || *p != 2 || order < 16) fail(ErrorCode::invalid_argument, "modular group order must be 2^n, n >= 4");
    return metacyclic(order / 2, order / 4 + 1, 2, "M" + std::to_string(order));
}

FiniteGroup symmetric(std::size_t n) {
    if (n <= 1) return FiniteGroup();
    std::vector<Point> t(n), c(n);
    std::iota(t.begin(), t.end(), Point(0));
    std::swap(t[0], t[1]);
    for (std::size_t i = 0; i < n; ++i) c[i] = Point((i + 1) % n);
    return FiniteGroup::from_permutations(n, {t, c}, "S" + std::to_string(n));
}

FiniteGroup alternating(std::size_t n) {
    if (n <= 2) return FiniteGroup();
    std::vector<std::vector<Point>> gens;
    for (std::size_t k = 2; k < n; ++k) {
        std::vector<Point> g(n);
        std::iota(g.begin(), g.end(), Point(0));
        g[0] = 1;
        g[1] = Point(k);
        g[k] = 0;
        gens.push_back(g);
    }
    return FiniteGroup::from_permutations(n, gens, "A" + std::to_string(n));
}

FiniteGroup elementary_abelian(unsigned p, unsigned rank) {
    std::size_t n = 1;
    for (unsigned i = 0; i < rank; ++i) n *= p;
    auto mul = [p, rank](Elem a, Elem b) {
        Elem r = 0, unit = 1;
        for (unsigned i = 0; i < rank; ++i, unit *= p) r += unit * ((a / unit % p + b / unit % p) % p);
        return r;
    };
    auto inv = [p, rank](Elem a) {
        Elem r = 0, unit = 1;
        for (unsigned i = 0; i < rank; ++i, unit *= p) r += unit * ((p - a / unit % p) % p);
        return r;
    };
    std::vector<Elem> gens;
    Elem unit = 1;
    for (unsigned i = 0; i < rank; ++i, unit *= p) gens.push_back(unit);
    return formula_group(n, mul, inv, gens, "C" + std::to_string(p) + "^" + std::to_string(rank));
}

namespace {

FiniteGroup matrix_group_on_vectors(unsigned q, const std::vector<std::array<unsigned, 4>>& mats, std::string label) {
    if (!is_prime(q)) fail(ErrorCode::invalid_argument, "matrix groups need prime q");
    const std::size_t npts = std::size_t(q) * q - 1;
    std::vector<std::vector<Point>> gens;
    for (const auto& M : mats) {
        std::vector<Point> img(npts);
        for (std::size_t v = 1; v <= npts; ++v) {
            unsigned x = unsigned(v % q), y = unsigned(v / q);
            unsigned nx = (M[0] * x + M[1] * y) % q, ny = (M[2] * x + M[3] * y) % q;
            img[v - 1] = Point(nx + q * ny - 1);
        }
        gens.push_back(img);
    }
    return FiniteGroup::from_permutations(npts, gens, std::move(label));
}

unsigned primitive_root(unsigned q) {
    for (unsigned g = 2; g < q; ++g) {
        unsigned x = g, ord = 1;
        while (x != 1) {
            x = x * g % q;
            ++ord;
        }
        if (ord == q - 1) return g;
    }
    return 1;
}

}  // namespace

FiniteGroup sl2(unsigned q) {
    return matrix_group_on_vectors(q, {{1, 1, 0, 1}, {1, 0, 1, 1}}, "SL2(" + std::to_string(q) + ")");
}

FiniteGroup gl2(unsigned q) {
    unsigned g = primitive_root(q);
    return matrix_group_on_vectors(q, {{1, 1, 0, 1}, {1, 0, 1, 1}, {g, 0, 0, 1}}, "GL2(" + std::to_string(q) + ")");
}

FiniteGroup pgl2(unsigned p, unsigned k) {
    GaloisField F(p, k);
    const std::uint32_t inf = F.size();
    auto shift = mobius_perm(F, [&](std::uint32_t x) { return x == inf ? inf : F.add(x, 1); });
    auto scale = mobius_perm(F, [&](std::uint32_t x) { return x == inf ? inf : F.mul(x, F.primitive()); });
    auto invert = mobius_perm(F, [&](std::uint32_t x) {
        if (x == inf) return std::uint32_t(0);
        if (x == 0) return inf;
        return F.inv(x);
    });
    return FiniteGroup::from_permutations(F.size() + 1, {shift, scale, invert},
                                          "PGL2(" + std::to_string(F.size()) + ")");
}

FiniteGroup heisenberg(unsigned p) {
    FiniteGroup C = cyclic(p);
    return semidirect(p, 2, C, {Matrix{1, 1, 0, 1}}, "Heis" + std::to_string(p));
}

namespace {

std::size_t parse_num(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail(ErrorCode::parse_error, "expected a number in group name '" + s + "'");
    return std::stoul(s.substr(start, pos - start));
}

// smallest nontrivial r with r^s = 1 mod m
std::size_t smallest_root(std::size_t m, std::size_t s) {
    for (std::size_t r = 2; r < m; ++r) {
        if (std::gcd(r, m) != 1) continue;
        if (powmod(r, s, m) == 1) return r;
    }
    fail(ErrorCode::invalid_argument, "no nontrivial action of C" + std::to_string(s) + " on C" + std::to_string(m));
}

FiniteGroup factor_by_name(const std::string& s) {
    static const std::map<std::string, std::function<FiniteGroup()>> special = {
        {"1", [] { return FiniteGroup(); }},
        {"V4", [] { return elementary_abelian(2, 2); }},
        {"F20", [] { return metacyclic(5, 2, 4, "F20"); }},
        {"Heis3", [] { return heisenberg(3); }},
        {"C3^2:C4",
         [] { return semidirect(3, 2, cyclic(4), {Matrix{0, 2, 1, 0}}, "C3^2:C4"); }},
        {"C3^2:C2",
         [] { return semidirect(3, 2, cyclic(2), {Matrix{2, 0, 0, 2}}, "C3^2:C2"); }},
        {"C2^2:C3",
         [] { return semidirect(2, 2, cyclic(3), {Matrix{0, 1, 1, 1}}, "C2^2:C3"); }},
    };
    if (auto it = special.find(s); it != special.end()) return it->second();
    std::size_t pos = 0;
    auto starts = [&](const char* pre) {
        std::size_t n = std::char_traits<char>::length(pre);
        if (s.compare(0, n, pre) == 0 && n < s.size() && std::isdigit(static_cast<unsigned char>(s[n]))) {
            pos = n;
            return true;
        }
        return false;
    };
    auto finish = [&](FiniteGroup g) {
        if (pos != s.size()) fail(ErrorCode::parse_error, "trailing characters in group name '" + s + "'");
        return g;
    };
    if (s.rfind("PGL2(", 0) == 0 || s.rfind("GL2(", 0) == 0 || s.rfind("SL2(", 0) == 0) {
        pos = s.find('(') + 1;
        std::size_t q = parse_num(s, pos);
        if (pos >= s.size() || s[pos] != ')') fail(ErrorCode::parse_error, "bad group name '" + s + "'");
        ++pos;
        if (s[0] == 'P') {
            auto p = prime_of_power(q);
            if (!p) fail(ErrorCode::invalid_argument, "PGL2 needs a prime power");
            unsigned k = 0;
            for (std::size_t t = q; t > 1; t /= *p) ++k;
            return finish(pgl2(*p, k));
        }
        return finish(s[0] == 'G' ? gl2(unsigned(q)) : sl2(unsigned(q)));
    }
    if (starts("Dic")) return finish(dicyclic(parse_num(s, pos)));
    if (starts("SD")) return finish(semidihedral(parse_num(s, pos)));
    if (starts("Q")) return finish(dicyclic(parse_num(s, pos)));
    if (starts("M")) return finish(modular(parse_num(s, pos)));
    if (starts("D")) return finish(dihedral(parse_num(s, pos)));
    if (starts("S")) return finish(symmetric(parse_num(s, pos)));
    if (starts("A")) return finish(alternating(parse_num(s, pos)));
    if (starts("C")) {
        std::size_t n = parse_num(s, pos);
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            std::size_t r = parse_num(s, pos);
            if (!is_prime(n)) fail(ErrorCode::invalid_argument, "C<p>^<r> needs prime p");
            return finish(elementary_abelian(unsigned(n), unsigned(r)));
        }
        if (pos < s.size() && s[pos] == ':') {
            ++pos;
            if (pos >= s.size() || s[pos] != 'C') fail(ErrorCode::parse_error, "bad group name '" + s + "'");
            ++pos;
            std::size_t k = parse_num(s, pos);
            return finish(metacyclic(n, smallest_root(n, k), k, s));
        }
        return finish(cyclic(n));
    }
    fail(ErrorCode::parse_error, "unknown group name '" + s + "'");
}

}  // namespace

FiniteGroup by_name(const std::string& name) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= name.size(); ++i) {
        if (i == name.size() || name[i] == 'x') {
            parts.push_back(name.substr(start, i - start));
            start = i + 1;
        }
    }
    FiniteGroup g = factor_by_name(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(g, factor_by_name(parts[i]));
    if (parts.size() > 1) {
        // relabel by rebuilding through the rule/table path keeps the structure; only the label differs
        return direct_product(g, FiniteGroup(), name);
    }
    return g;
}

std::vector<CorpusEntry> small_corpus() {
    static const char* names[] = {
        "C2",     "C3",      "C4",     "C2xC2",  "C5",      "C6",     "S3",    "C7",      "C8",
        "C4xC2",  "C2^3",    "D8",     "Q8",     "C9",      "C3xC3",  "D10",   "C10",     "Dic12",
        "A4",     "D12",     "C12",    "C2xC6",  "D14",     "D16",    "SD16",  "Q16",     "M16",
        "C4xC4",  "C2xD8",   "D18",    "C3^2:C2", "Heis3",  "C9:C3",  "C7:C3", "D20",     "F20",
        "S4",     "SL2(3)",  "A4xC2",  "Q8xC3",  "D8xC3",   "C3:C8",  "C5xS3", "S3xC3",   "S3xS3",
        "A4xC3",  "C3^2:C4", "C13:C3", "GL2(3)", "S4xC2",   "C13:C4", "C11:C5", "A5",     "S4xC3",
        "Dic20",  "C2xQ8",   "C2^2:C3",
    };
    std::vector<CorpusEntry> out;
    for (const char* n : names) out.push_back({n, by_name(n)});
    return out;
}

}  // namespace plocal::catalog
