#include "plocal/group.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <random>
#include <string_view>
#include <unordered_map>

namespace plocal {

const char* representation_name(Representation r) {
    switch (r) {
        case Representation::permutation: return "perm";
        case Representation::table: return "table";
        case Representation::semidirect: return "semidirect";
        case Representation::rule: return "rule";
    }
    return "?";
}

namespace detail {

struct GroupData {
    virtual ~GroupData() = default;
    std::size_t order = 1;
    Representation rep = Representation::table;
    std::string label;
    std::vector<Elem> gens;
    virtual Elem mul(Elem a, Elem b) const = 0;
    virtual Elem inv(Elem a) const = 0;
};

struct TableData final : GroupData {
    std::vector<Elem> table;
    std::vector<Elem> inverse;
    Elem mul(Elem a, Elem b) const override { return table[std::size_t(a) * order + b]; }
    Elem inv(Elem a) const override { return inverse[a]; }
};

struct PermData final : GroupData {
    std::size_t degree = 0;
    std::vector<Point> perms;  // order * degree
    std::unordered_map<std::string, Elem> index;
    std::vector<Elem> table;  // optional
    std::vector<Elem> inverse;

    const Point* perm(Elem a) const { return perms.data() + std::size_t(a) * degree; }
    std::string key(const Point* p) const {
        return std::string(reinterpret_cast<const char*>(p), degree * sizeof(Point));
    }
    Elem lookup(const Point* p) const { return index.at(key(p)); }
    Elem compose_lookup(Elem a, Elem b) const {
        thread_local std::vector<Point> buf;
        buf.resize(degree);
        const Point* pa = perm(a);
        const Point* pb = perm(b);
        for (std::size_t x = 0; x < degree; ++x) buf[x] = pa[pb[x]];
        return lookup(buf.data());
    }
    Elem mul(Elem a, Elem b) const override {
        if (!table.empty()) return table[std::size_t(a) * order + b];
        return compose_lookup(a, b);
    }
    Elem inv(Elem a) const override { return inverse[a]; }
};

struct SemidirectData final : GroupData {
    SemidirectInfo info;

    void decode(std::uint64_t v, std::uint32_t* out) const {
        for (std::size_t i = 0; i < info.dim; ++i) {
            out[i] = std::uint32_t(v % info.q);
            v /= info.q;
        }
    }
    std::uint64_t encode(const std::uint32_t* in) const {
        std::uint64_t v = 0;
        for (std::size_t i = info.dim; i-- > 0;) v = v * info.q + in[i];
        return v;
    }
    Elem mul(Elem a, Elem b) const override {
        const std::uint64_t mo = info.module_order;
        const Elem ha = Elem(a / mo), hb = Elem(b / mo);
        const std::size_t d = info.dim;
        thread_local std::vector<std::uint32_t> va, vb, out;
        va.resize(d);
        vb.resize(d);
        out.resize(d);
        decode(a % mo, va.data());
        decode(b % mo, vb.data());
        const auto& M = info.matrices[ha];
        for (std::size_t i = 0; i < d; ++i) {
            std::uint64_t s = va[i];
            for (std::size_t j = 0; j < d; ++j) s += std::uint64_t(M[i * d + j]) * vb[j];
            out[i] = std::uint32_t(s % info.q);
        }
        const Elem h = info.acting->mul(ha, hb);
        return Elem(encode(out.data()) + mo * h);
    }
    Elem inv(Elem a) const override {
        const std::uint64_t mo = info.module_order;
        const Elem h = Elem(a / mo);
        const Elem hi = info.acting->inv(h);
        const std::size_t d = info.dim;
        thread_local std::vector<std::uint32_t> va, out;
        va.resize(d);
        out.resize(d);
        decode(a % mo, va.data());
        const auto& M = info.matrices[hi];
        for (std::size_t i = 0; i < d; ++i) {
            std::uint64_t s = 0;
            for (std::size_t j = 0; j < d; ++j) s += std::uint64_t(M[i * d + j]) * va[j];
            s %= info.q;
            out[i] = std::uint32_t((info.q - s) % info.q);
        }
        return Elem(encode(out.data()) + mo * hi);
    }
};

struct RuleData final : GroupData {
    FiniteGroup::MulFn mulfn;
    FiniteGroup::InvFn invfn;
    Elem mul(Elem a, Elem b) const override { return mulfn(a, b); }
    Elem inv(Elem a) const override { return invfn(a); }
};

struct SubgroupData {
    FiniteGroup parent;
    std::vector<Elem> members;
    std::vector<std::uint64_t> mask;
    std::vector<Elem> gens;

    bool has(Elem x) const { return (mask[x >> 6] >> (x & 63)) & 1u; }
};

}  // namespace detail

namespace {

std::shared_ptr<detail::TableData> trivial_data() {
    auto d = std::make_shared<detail::TableData>();
    d->order = 1;
    d->table = {0};
    d->inverse = {0};
    d->label = "1";
    return d;
}

// Greedy generating set of a group given by an element list; closure via mul.
template <class Mul>
std::vector<Elem> greedy_generators(std::size_t order, std::span<const Elem> elems, Mul mul) {
    std::vector<std::uint64_t> mask((order + 63) / 64, 0);
    auto has = [&](Elem x) { return (mask[x >> 6] >> (x & 63)) & 1u; };
    auto set = [&](Elem x) { mask[x >> 6] |= std::uint64_t(1) << (x & 63); };
    std::vector<Elem> closure{0};
    set(0);
    std::vector<Elem> gens;
    for (Elem e : elems) {
        if (has(e)) continue;
        gens.push_back(e);
        for (std::size_t i = 0; i < closure.size(); ++i) {
            for (Elem g : gens) {
                Elem y = mul(closure[i], g);
                if (!has(y)) {
                    set(y);
                    closure.push_back(y);
                }
            }
        }
    }
    return gens;
}

}  // namespace

FiniteGroup::FiniteGroup() : d_(trivial_data()) {}

FiniteGroup FiniteGroup::from_permutations(std::size_t degree,
                                           const std::vector<std::vector<Point>>& generators,
                                           std::string label, const Bounds& bounds) {
    auto d = std::make_shared<detail::PermData>();
    d->rep = Representation::permutation;
    d->degree = degree;
    d->label = std::move(label);
    for (const auto& g : generators) {
        if (g.size() != degree) fail(ErrorCode::invalid_group, "generator has wrong degree");
        std::vector<bool> seen(degree, false);
        for (Point x : g) {
            if (x >= degree || seen[x]) fail(ErrorCode::invalid_group, "generator is not a permutation");
            seen[x] = true;
        }
    }
    std::vector<Point> flat(degree);
    std::iota(flat.begin(), flat.end(), Point(0));
    std::vector<Point> elems = flat;
    d->index.emplace(d->key(flat.data()), 0);
    std::size_t count = 1;
    std::vector<Point> buf(degree);
    for (std::size_t i = 0; i < count; ++i) {
        for (const auto& g : generators) {
            const Point* e = elems.data() + i * degree;
            for (std::size_t x = 0; x < degree; ++x) buf[x] = e[g[x]];
            auto k = d->key(buf.data());
            if (d->index.count(k)) continue;
            if (count + 1 > bounds.max_group_order)
                fail(ErrorCode::bound_exceeded, "permutation group order exceeds enumeration bound " +
                                                    std::to_string(bounds.max_group_order));
            d->index.emplace(std::move(k), Elem(count));
            elems.insert(elems.end(), buf.begin(), buf.end());
            ++count;
        }
    }
    std::vector<Elem> order_idx(count);
    std::iota(order_idx.begin(), order_idx.end(), Elem(0));
    std::sort(order_idx.begin(), order_idx.end(), [&](Elem a, Elem b) {
        return std::lexicographical_compare(elems.begin() + a * degree, elems.begin() + (a + 1) * degree,
                                            elems.begin() + b * degree, elems.begin() + (b + 1) * degree);
    });
    d->order = count;
    d->perms.resize(count * degree);
    d->index.clear();
    for (std::size_t i = 0; i < count; ++i) {
        std::copy(elems.begin() + order_idx[i] * degree, elems.begin() + (order_idx[i] + 1) * degree,
                  d->perms.begin() + i * degree);
        d->index.emplace(d->key(d->perms.data() + i * degree), Elem(i));
    }
    d->inverse.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        const Point* p = d->perm(Elem(i));
        for (std::size_t x = 0; x < degree; ++x) buf[p[x]] = Point(x);
        d->inverse[i] = d->lookup(buf.data());
    }
    if (count <= bounds.max_table_order) {
        d->table.resize(count * count);
        for (std::size_t a = 0; a < count; ++a)
            for (std::size_t b = 0; b < count; ++b) d->table[a * count + b] = d->compose_lookup(Elem(a), Elem(b));
    }
    for (const auto& g : generators) {
        Elem e = d->lookup(g.data());
        if (e != 0 && std::find(d->gens.begin(), d->gens.end(), e) == d->gens.end()) d->gens.push_back(e);
    }
    return FiniteGroup(d);
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Elem>>& table, std::string label,
                                    const Bounds& bounds) {
    const std::size_t n = table.size();
    if (n == 0) fail(ErrorCode::invalid_group, "empty multiplication table");
    if (n > bounds.max_group_order) fail(ErrorCode::bound_exceeded, "table group too large");
    auto d = std::make_shared<detail::TableData>();
    d->order = n;
    d->label = std::move(label);
    d->table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        if (table[a].size() != n) fail(ErrorCode::invalid_group, "multiplication table is not square");
        std::vector<bool> seen(n, false);
        for (std::size_t b = 0; b < n; ++b) {
            Elem c = table[a][b];
            if (c >= n) fail(ErrorCode::invalid_group, "table entry out of range");
            if (seen[c]) fail(ErrorCode::invalid_group, "table row is not a permutation");
            seen[c] = true;
            d->table[a * n + b] = c;
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        if (d->table[a] != a || d->table[a * n] != a)
            fail(ErrorCode::invalid_group, "element 0 is not the identity");
    }
    auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
        return d->table[d->table[a * n + b] * n + c] == d->table[a * n + d->table[b * n + c]];
    };
    if (n <= bounds.assoc_full_check_order) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (!assoc(a, b, c)) fail(ErrorCode::invalid_group, "table is not associative");
    } else {
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int t = 0; t < 20000; ++t)
            if (!assoc(pick(rng), pick(rng), pick(rng)))
                fail(ErrorCode::invalid_group, "table is not associative");
    }
    d->inverse.resize(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (d->table[a * n + b] == 0) d->inverse[a] = Elem(b);
    std::vector<Elem> all(n);
    std::iota(all.begin(), all.end(), Elem(0));
    d->gens = greedy_generators(n, all, [&](Elem a, Elem b) { return d->table[a * n + b]; });
    return FiniteGroup(d);
}

FiniteGroup FiniteGroup::from_rule(std::size_t order, MulFn mul, InvFn inv, std::vector<Elem> generators,
                                   std::string label) {
    auto d = std::make_shared<detail::RuleData>();
    d->order = order;
    d->rep = Representation::rule;
    d->label = std::move(label);
    d->mulfn = std::move(mul);
    d->invfn = std::move(inv);
    for (Elem g : generators)
        if (g != 0 && std::find(d->gens.begin(), d->gens.end(), g) == d->gens.end()) d->gens.push_back(g);
    return FiniteGroup(d);
}

FiniteGroup FiniteGroup::from_semidirect(SemidirectInfo info, std::string label, const Bounds& bounds) {
    const std::size_t h = info.acting->order();
    if (info.matrices.size() != h) fail(ErrorCode::invalid_group, "semidirect action needs one matrix per element");
    std::uint64_t mo = 1;
    for (std::size_t i = 0; i < info.dim; ++i) {
        mo *= info.q;
        if (mo > bounds.max_semidirect_order) fail(ErrorCode::bound_exceeded, "semidirect module too large");
    }
    info.module_order = mo;
    if (mo * h > bounds.max_semidirect_order)
        fail(ErrorCode::bound_exceeded, "semidirect product order " + std::to_string(mo * h) +
                                            " exceeds bound " + std::to_string(bounds.max_semidirect_order));
    auto d = std::make_shared<detail::SemidirectData>();
    d->order = std::size_t(mo * h);
    d->rep = Representation::semidirect;
    d->label = std::move(label);
    std::uint64_t unit = 1;
    for (std::size_t i = 0; i < info.dim; ++i, unit *= info.q) d->gens.push_back(Elem(unit));
    for (Elem g : info.acting->generators()) d->gens.push_back(Elem(mo * g));
    d->info = std::move(info);
    return FiniteGroup(d);
}

std::size_t FiniteGroup::order() const { return d_->order; }
Elem FiniteGroup::mul(Elem a, Elem b) const { return d_->mul(a, b); }
Elem FiniteGroup::inv(Elem a) const { return d_->inv(a); }

Elem FiniteGroup::pow(Elem a, std::uint64_t k) const {
    Elem r = 0, base = a;
    while (k) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

std::uint64_t FiniteGroup::element_order(Elem a) const {
    std::uint64_t k = 1;
    Elem x = a;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

std::span<const Elem> FiniteGroup::generators() const { return d_->gens; }
Representation FiniteGroup::representation() const { return d_->rep; }
const std::string& FiniteGroup::label() const { return d_->label; }

bool FiniteGroup::is_abelian() const {
    const auto& g = d_->gens;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (mul(g[i], g[j]) != mul(g[j], g[i])) return false;
    return true;
}

std::size_t FiniteGroup::degree() const {
    auto p = dynamic_cast<const detail::PermData*>(d_.get());
    return p ? p->degree : 0;
}

std::span<const Point> FiniteGroup::permutation(Elem a) const {
    auto p = dynamic_cast<const detail::PermData*>(d_.get());
    if (!p) fail(ErrorCode::invalid_argument, "not a permutation group");
    return {p->perm(a), p->degree};
}

std::optional<Elem> FiniteGroup::find_permutation(std::span<const Point> images) const {
    auto p = dynamic_cast<const detail::PermData*>(d_.get());
    if (!p || images.size() != p->degree) return std::nullopt;
    auto it = p->index.find(p->key(images.data()));
    if (it == p->index.end()) return std::nullopt;
    return it->second;
}

const SemidirectInfo* FiniteGroup::semidirect_info() const {
    auto p = dynamic_cast<const detail::SemidirectData*>(d_.get());
    return p ? &p->info : nullptr;
}

// ---------------------------------------------------------------- Subgroup

struct SubgroupBuilder {
    static Subgroup make(const FiniteGroup& G, std::vector<Elem> members, std::vector<Elem> gens) {
        auto d = std::make_shared<detail::SubgroupData>();
        d->parent = G;
        d->mask.assign((G.order() + 63) / 64, 0);
        for (Elem x : members) d->mask[x >> 6] |= std::uint64_t(1) << (x & 63);
        d->members = std::move(members);
        d->gens = std::move(gens);
        Subgroup s;
        s.d_ = std::move(d);
        return s;
    }
};

Subgroup Subgroup::generated(const FiniteGroup& G, std::span<const Elem> gens) {
    std::vector<std::uint64_t> mask((G.order() + 63) / 64, 0);
    auto has = [&](Elem x) { return (mask[x >> 6] >> (x & 63)) & 1u; };
    auto set = [&](Elem x) { mask[x >> 6] |= std::uint64_t(1) << (x & 63); };
    std::vector<Elem> g;
    for (Elem x : gens) {
        if (x >= G.order()) fail(ErrorCode::invalid_argument, "generator out of range");
        if (x != 0 && std::find(g.begin(), g.end(), x) == g.end()) g.push_back(x);
    }
    std::vector<Elem> elems{0};
    set(0);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (Elem s : g) {
            Elem y = G.mul(elems[i], s);
            if (!has(y)) {
                set(y);
                elems.push_back(y);
            }
        }
    std::sort(elems.begin(), elems.end());
    if (g.size() > 1 && elems.size() > 2) {
        // keep the generating set small
        auto greedy = greedy_generators(G.order(), g, [&](Elem a, Elem b) { return G.mul(a, b); });
        g = std::move(greedy);
    }
    return SubgroupBuilder::make(G, std::move(elems), std::move(g));
}

Subgroup Subgroup::from_members(const FiniteGroup& G, std::vector<Elem> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty() || members.front() != 0) fail(ErrorCode::not_a_subgroup, "subset lacks the identity");
    if (members.back() >= G.order()) fail(ErrorCode::not_a_subgroup, "member out of range");
    std::vector<std::uint64_t> inset((G.order() + 63) / 64, 0);
    for (Elem x : members) inset[x >> 6] |= std::uint64_t(1) << (x & 63);
    bool closed = true;
    auto gens = greedy_generators(G.order(), members, [&](Elem a, Elem b) {
        Elem c = G.mul(a, b);
        if (!((inset[c >> 6] >> (c & 63)) & 1u)) closed = false;
        return closed ? c : Elem(0);
    });
    if (!closed) fail(ErrorCode::not_a_subgroup, "subset is not closed under multiplication");
    return SubgroupBuilder::make(G, std::move(members), std::move(gens));
}

Subgroup Subgroup::trusted(const FiniteGroup& G, std::vector<Elem> members) {
    std::sort(members.begin(), members.end());
    auto gens = greedy_generators(G.order(), members, [&](Elem a, Elem b) { return G.mul(a, b); });
    return SubgroupBuilder::make(G, std::move(members), std::move(gens));
}

Subgroup Subgroup::whole(const FiniteGroup& G) {
    std::vector<Elem> all(G.order());
    std::iota(all.begin(), all.end(), Elem(0));
    auto gens = std::vector<Elem>(G.generators().begin(), G.generators().end());
    return SubgroupBuilder::make(G, std::move(all), std::move(gens));
}

Subgroup Subgroup::trivial(const FiniteGroup& G) { return SubgroupBuilder::make(G, {0}, {}); }

const FiniteGroup& Subgroup::parent() const { return d_->parent; }
std::span<const Elem> Subgroup::members() const { return d_->members; }
std::size_t Subgroup::order() const { return d_->members.size(); }
bool Subgroup::contains(Elem x) const { return x < d_->parent.order() && d_->has(x); }

bool Subgroup::contains(const Subgroup& other) const {
    if (!d_->parent.same_as(other.parent())) fail(ErrorCode::mismatched_parent, "subgroups of different groups");
    if (other.order() > order()) return false;
    for (Elem x : other.members())
        if (!d_->has(x)) return false;
    return true;
}

std::span<const Elem> Subgroup::generators() const { return d_->gens; }

std::size_t Subgroup::position(Elem x) const {
    auto it = std::lower_bound(d_->members.begin(), d_->members.end(), x);
    if (it == d_->members.end() || *it != x) fail(ErrorCode::invalid_argument, "element not in subgroup");
    return std::size_t(it - d_->members.begin());
}

bool operator==(const Subgroup& a, const Subgroup& b) {
    if (a.d_ == b.d_) return true;
    if (!a.d_ || !b.d_) return false;
    return a.parent().same_as(b.parent()) && a.d_->members == b.d_->members;
}

bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.d_->members < b.d_->members;
}

// ---------------------------------------------------------------- GroupMap

GroupMap::GroupMap(Subgroup domain, Subgroup codomain, std::vector<Elem> table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
    if (table_.size() != domain_.order()) fail(ErrorCode::invalid_argument, "map table has wrong length");
}

GroupMap GroupMap::checked(Subgroup domain, Subgroup codomain, std::vector<Elem> table) {
    GroupMap m(std::move(domain), std::move(codomain), std::move(table));
    for (Elem y : m.table_)
        if (!m.codomain_.contains(y)) fail(ErrorCode::invalid_argument, "map image leaves the codomain");
    if (!m.is_homomorphism()) fail(ErrorCode::invalid_argument, "map is not a homomorphism");
    return m;
}

GroupMap GroupMap::from_generator_images(const Subgroup& domain, const Subgroup& codomain,
                                         std::span<const Elem> gens, std::span<const Elem> images) {
    if (gens.size() != images.size()) fail(ErrorCode::invalid_argument, "generator/image count mismatch");
    const FiniteGroup& G = domain.parent();
    const FiniteGroup& H = codomain.parent();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!domain.contains(gens[i])) fail(ErrorCode::invalid_argument, "generator outside domain");
        if (!codomain.contains(images[i])) fail(ErrorCode::invalid_argument, "image outside codomain");
    }
    const std::size_t n = domain.order();
    std::vector<Elem> table(n, 0);
    std::vector<bool> known(n, false);
    std::vector<Elem> queue{0};
    known[domain.position(0)] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        Elem x = queue[i];
        Elem fx = table[domain.position(x)];
        for (std::size_t k = 0; k < gens.size(); ++k) {
            Elem y = G.mul(x, gens[k]);
            Elem fy = H.mul(fx, images[k]);
            std::size_t py = domain.position(y);
            if (!known[py]) {
                known[py] = true;
                table[py] = fy;
                queue.push_back(y);
            } else if (table[py] != fy) {
                fail(ErrorCode::invalid_argument, "generator images do not define a homomorphism");
            }
        }
    }
    if (queue.size() != n) fail(ErrorCode::invalid_argument, "generators do not generate the domain");
    return GroupMap(domain, codomain, std::move(table));
}

GroupMap GroupMap::conjugation(const Subgroup& P, const Subgroup& Q, Elem g) {
    const FiniteGroup& G = P.parent();
    std::vector<Elem> t;
    t.reserve(P.order());
    const Elem gi = G.inv(g);
    for (Elem x : P.members()) t.push_back(G.mul(G.mul(g, x), gi));
    return GroupMap(P, Q, std::move(t));
}

GroupMap GroupMap::inclusion(const Subgroup& P, const Subgroup& Q) {
    return GroupMap(P, Q, std::vector<Elem>(P.members().begin(), P.members().end()));
}

bool GroupMap::injective() const {
    std::vector<Elem> t = table_;
    std::sort(t.begin(), t.end());
    return std::adjacent_find(t.begin(), t.end()) == t.end();
}

bool GroupMap::is_homomorphism() const {
    const FiniteGroup& G = domain_.parent();
    const FiniteGroup& H = codomain_.parent();
    auto gens = domain_.generators();
    for (Elem x : domain_.members()) {
        Elem fx = (*this)(x);
        for (Elem g : gens)
            if ((*this)(G.mul(x, g)) != H.mul(fx, (*this)(g))) return false;
    }
    return table_.empty() || table_[0] == 0;
}

Subgroup GroupMap::image() const {
    std::vector<Elem> g;
    for (Elem x : domain_.generators()) g.push_back((*this)(x));
    return Subgroup::generated(codomain_.parent(), g);
}

GroupMap GroupMap::after(const GroupMap& first) const {
    std::vector<Elem> t;
    t.reserve(first.table_.size());
    for (Elem y : first.table_) t.push_back((*this)(y));
    return GroupMap(first.domain_, codomain_, std::move(t));
}

GroupMap GroupMap::restrict_to(const Subgroup& sub) const {
    std::vector<Elem> t;
    t.reserve(sub.order());
    for (Elem x : sub.members()) t.push_back((*this)(x));
    return GroupMap(sub, codomain_, std::move(t));
}

GroupMap GroupMap::with_codomain(const Subgroup& cod) const { return GroupMap(domain_, cod, table_); }

GroupMap GroupMap::inverse() const {
    if (!injective()) fail(ErrorCode::non_injective, "cannot invert a non-injective map");
    Subgroup im = image();
    std::vector<Elem> t(im.order());
    auto dm = domain_.members();
    for (std::size_t i = 0; i < dm.size(); ++i) t[im.position(table_[i])] = dm[i];
    return GroupMap(im, domain_, std::move(t));
}

}  // namespace plocal
