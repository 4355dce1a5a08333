#include "gid/generators.hpp"

#include <algorithm>
#include <string>

#include "gid/error.hpp"
#include "gid/rng.hpp"

namespace gid {

namespace {

void check_size(int n)
{
    if (n < 0 || n > kMaxIndividuals)
        throw Error(Errc::InvalidArgument, "n must lie in [0, 64]");
}

Profile fill_profile(Rng& rng, int n, ProfileKind kind, double density)
{
    check_size(n);
    if (!(density >= 0.0 && density <= 1.0))
        throw Error(Errc::InvalidArgument, "density must lie in [0, 1]");
    Profile p(n, kind);
    const Cell special = kind == ProfileKind::Partial ? Cell::Unknown : Cell::Indifferent;
    for (Individual a = 0; a < n; ++a)
        for (Individual b = 0; b < n; ++b) {
            if (kind != ProfileKind::Binary && rng.chance(density))
                p.set(a, b, special);
            else
                p.set(a, b, (rng.next() & 1U) ? Cell::Pos : Cell::Neg);
        }
    return p;
}

Profile fill_r_profile(Rng& rng, int n, int r, ProfileKind kind = ProfileKind::Binary)
{
    check_size(n);
    if (r < 1 || r > n)
        throw Error(Errc::InvalidR, "r = " + std::to_string(r) + " outside [1, " + std::to_string(n) + "]");
    Profile p(n, kind);
    std::vector<Individual> order(static_cast<std::size_t>(n));
    for (Individual a = 0; a < n; ++a) {
        for (Individual b = 0; b < n; ++b)
            order[static_cast<std::size_t>(b)] = b;
        rng.shuffle(order);
        for (int k = 0; k < r; ++k)
            p.set(a, order[static_cast<std::size_t>(k)], Cell::Pos);
    }
    return p;
}

Profile fill_r_partial(Rng& rng, int n, int r, double density)
{
    if (!(density >= 0.0 && density <= 1.0))
        throw Error(Errc::InvalidArgument, "density must lie in [0, 1]");
    Profile p = fill_r_profile(rng, n, r, ProfileKind::Partial);
    for (Individual a = 0; a < n; ++a)
        for (Individual b = 0; b < n; ++b)
            if (rng.chance(density))
                p.set(a, b, Cell::Unknown);
    return p;
}

IndividualSet random_subset(Rng& rng, IndividualSet domain, double p)
{
    IndividualSet out;
    for (Individual a : domain)
        if (rng.chance(p))
            out.insert(a);
    return out;
}

IndividualSet random_nonempty_subset(Rng& rng, IndividualSet domain, double p)
{
    IndividualSet out = random_subset(rng, domain, p);
    if (out.empty() && !domain.empty()) {
        auto v = domain.to_vector();
        out.insert(rng.pick(v));
    }
    return out;
}

// Each element `copies` times, dealt into triples of distinct elements.
std::vector<std::array<int, 3>> deal_triples(Rng& rng, int m, int copies)
{
    std::vector<int> pool;
    for (int x = 0; x < 3 * m; ++x)
        for (int c = 0; c < copies; ++c)
            pool.push_back(x);
    while (true) {
        rng.shuffle(pool);
        std::vector<std::array<int, 3>> out;
        bool ok = true;
        for (std::size_t i = 0; ok && i < pool.size(); i += 3) {
            std::array<int, 3> t{pool[i], pool[i + 1], pool[i + 2]};
            std::sort(t.begin(), t.end());
            ok = t[0] != t[1] && t[1] != t[2];
            out.push_back(t);
        }
        if (ok)
            return out;
    }
}

std::vector<std::string> rx3c_names(int m, const std::vector<std::string>& extra)
{
    std::vector<std::string> names;
    for (int i = 1; i <= 3 * m; ++i)
        names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= 3 * m; ++i)
        names.push_back("F" + std::to_string(i));
    names.insert(names.end(), extra.begin(), extra.end());
    return names;
}

void require_valid(const Rx3cInstance& rx3c)
{
    if (!rx3c.valid())
        throw Error(Errc::PreconditionViolated, "not a restricted exact cover instance");
}

bool contains(const std::array<int, 3>& t, int x) { return std::find(t.begin(), t.end(), x) != t.end(); }

} // namespace

Profile gen_random_profile(int n, ProfileKind kind, double density, std::uint64_t seed)
{
    Rng rng(seed);
    return fill_profile(rng, n, kind, density);
}

Profile gen_random_r_profile(int n, int r, std::uint64_t seed)
{
    Rng rng(seed);
    return fill_r_profile(rng, n, r);
}

Profile gen_random_r_partial(int n, int r, double density, std::uint64_t seed)
{
    Rng rng(seed);
    return fill_r_partial(rng, n, r, density);
}

bool Rx3cInstance::valid() const
{
    if (m < 1 || triples.size() != static_cast<std::size_t>(3 * m))
        return false;
    std::vector<int> freq(static_cast<std::size_t>(3 * m), 0);
    for (const auto& t : triples) {
        if (t[0] >= t[1] || t[1] >= t[2] || t[0] < 0 || t[2] >= 3 * m)
            return false;
        for (int x : t)
            ++freq[static_cast<std::size_t>(x)];
    }
    return std::all_of(freq.begin(), freq.end(), [](int f) { return f == 3; });
}

Rx3cInstance gen_rx3c_planted(int m, std::uint64_t seed)
{
    if (m < 1)
        throw Error(Errc::InvalidArgument, "m must be positive");
    Rng rng(seed);
    std::vector<int> elems(static_cast<std::size_t>(3 * m));
    for (int x = 0; x < 3 * m; ++x)
        elems[static_cast<std::size_t>(x)] = x;
    rng.shuffle(elems);
    std::vector<std::pair<std::array<int, 3>, bool>> all;
    for (std::size_t i = 0; i < elems.size(); i += 3) {
        std::array<int, 3> t{elems[i], elems[i + 1], elems[i + 2]};
        std::sort(t.begin(), t.end());
        all.emplace_back(t, true);
    }
    for (const auto& t : deal_triples(rng, m, 2))
        all.emplace_back(t, false);
    rng.shuffle(all);

    Rx3cInstance out;
    out.m = m;
    out.planted_cover.emplace();
    for (std::size_t i = 0; i < all.size(); ++i) {
        out.triples.push_back(all[i].first);
        if (all[i].second)
            out.planted_cover->push_back(static_cast<int>(i));
    }
    return out;
}

Rx3cInstance gen_rx3c_without_cover(int m, std::uint64_t seed)
{
    if (m < 2)
        throw Error(Errc::InvalidArgument, "every frequency-3 family with m = 1 has an exact cover");
    Rng rng(seed);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Rx3cInstance out;
        out.m = m;
        out.triples = deal_triples(rng, m, 3);
        if (!find_exact_cover(out))
            return out;
    }
    throw Error(Errc::InvalidArgument, "no cover-free family found");
}

std::optional<std::vector<int>> find_exact_cover(const Rx3cInstance& rx3c)
{
    const int size = rx3c.elements();
    std::vector<int> chosen;
    std::vector<bool> covered(static_cast<std::size_t>(size), false);
    auto search = [&](auto&& self) -> bool {
        auto first = std::find(covered.begin(), covered.end(), false);
        if (first == covered.end())
            return true;
        const int x = static_cast<int>(first - covered.begin());
        for (std::size_t i = 0; i < rx3c.triples.size(); ++i) {
            const auto& t = rx3c.triples[i];
            if (!contains(t, x) || std::any_of(t.begin(), t.end(), [&](int y) { return covered[static_cast<std::size_t>(y)]; }))
                continue;
            for (int y : t)
                covered[static_cast<std::size_t>(y)] = true;
            chosen.push_back(static_cast<int>(i));
            if (self(self))
                return true;
            chosen.pop_back();
            for (int y : t)
                covered[static_cast<std::size_t>(y)] = false;
        }
        return false;
    };
    if (!search(search))
        return std::nullopt;
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

AttackInstance rx3c_to_cgb(const Rx3cInstance& rx3c, bool perturb)
{
    require_valid(rx3c);
    const int m = rx3c.m, k = 3 * m;
    Profile p(2 * k);
    p.set_names(rx3c_names(m, {}));
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            p.set(x, y, Cell::Pos);
    for (int f = 0; f < k; ++f)
        for (int x = 0; x < k; ++x)
            if (!contains(rx3c.triples[static_cast<std::size_t>(f)], x))
                p.set(k + f, x, Cell::Pos);
    if (perturb)
        p.set(1, 0, Cell::Neg);

    AttackInstance in;
    in.profile = std::move(p);
    in.rule = SocialRule::consent(6 * m - 2, 1);
    in.family = Family::GB;
    in.objective = Objective::Constructive;
    in.aplus = IndividualSet::first(k);
    in.budget = m;
    return in;
}

AttackInstance rx3c_to_cgb_clipped(const Rx3cInstance& rx3c)
{
    require_valid(rx3c);
    const int m = rx3c.m, k = 3 * m;
    Profile p(2 * k);
    p.set_names(rx3c_names(m, {}));
    for (int x = 0; x < k; ++x)
        p.set(x, x, Cell::Pos);

    AttackInstance in;
    in.profile = std::move(p);
    in.rule = SocialRule::consent(2, 1);
    in.family = Family::GB;
    in.objective = Objective::Constructive;
    in.aplus = IndividualSet::first(k);
    in.budget = m;
    return in;
}

AttackInstance rx3c_to_cgcai_r(const Rx3cInstance& rx3c, CgcaiVariant variant, ReductionOptions opt)
{
    require_valid(rx3c);
    const int m = rx3c.m, k = 3 * m;
    const bool lsr = variant == CgcaiVariant::Lsr;
    const int dummies = lsr ? 4 : 3;
    const int d0 = 2 * k;
    std::vector<std::string> extra;
    for (int i = 1; i <= dummies; ++i)
        extra.push_back("d" + std::to_string(i));
    Profile p(2 * k + dummies);
    p.set_names(rx3c_names(m, extra));

    for (int x = 0; x < k; ++x) {
        if (lsr) {
            for (int d = 0; d < 4; ++d)
                p.set(x, d0 + d, Cell::Pos);
        } else {
            p.set(x, x, Cell::Pos);
            p.set(x, d0, Cell::Pos);
            p.set(x, d0 + 1, Cell::Pos);
        }
    }
    // The replacement dummy is one the triple rows do not already qualify.
    const int phantom = lsr ? d0 : d0 + 2;
    for (int f = 0; f < k; ++f) {
        if (lsr)
            p.set(k + f, k + f, Cell::Pos);
        for (int x : rx3c.triples[static_cast<std::size_t>(f)])
            p.set(k + f, opt.perturb && x == 0 ? phantom : x, Cell::Pos);
    }
    for (int d = 0; d < dummies; ++d)
        for (int e = 0; e < dummies; ++e)
            p.set(d0 + d, d0 + e, Cell::Pos);

    AttackInstance in;
    in.profile = std::move(p);
    in.rule = lsr ? SocialRule::lsr() : SocialRule::consent(2, opt.t);
    in.family = Family::GCAI;
    in.objective = Objective::Constructive;
    in.aplus = IndividualSet::first(k);
    in.pool = in.aplus;
    for (int d = 0; d < dummies; ++d)
        in.pool.insert(d0 + d);
    in.budget = m;
    in.r_restriction = lsr ? 4 : 3;
    return in;
}

AttackInstance rx3c_to_cgcdi(const Rx3cInstance& rx3c, bool perturb)
{
    require_valid(rx3c);
    const int m = rx3c.m, k = 3 * m;
    Profile p(2 * k);
    p.set_names(rx3c_names(m, {}));
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            if (x != y)
                p.set(x, y, Cell::Pos);
    for (int f = 0; f < k; ++f)
        for (int x = 0; x < k; ++x)
            if (!contains(rx3c.triples[static_cast<std::size_t>(f)], x))
                p.set(k + f, x, Cell::Pos);
    if (perturb)
        p.set(1, 0, Cell::Neg);

    AttackInstance in;
    in.profile = std::move(p);
    in.rule = SocialRule::consent(2, 4);
    in.family = Family::GCDI;
    in.objective = Objective::Constructive;
    in.aplus = IndividualSet::first(k);
    in.budget = m;
    return in;
}

AttackInstance augment_to_general(const AttackInstance& src, AugmentFlavor flavor, bool increment_budget)
{
    const Consent* c = src.rule.as_consent();
    const bool adding = flavor == AugmentFlavor::Gcai;
    auto require = [](bool ok, const char* what) {
        if (!ok)
            throw Error(Errc::PreconditionViolated, what);
    };
    require(src.family == (adding ? Family::GCAI : Family::GCDI), "source family does not match the flavor");
    require(src.objective == Objective::Constructive && src.aminus.empty(), "source must be constructive");
    require(c && c->s >= 2 && (adding ? c->t >= 2 : true), "source rule must be consent(s,t) with s >= 2");
    require(src.budget.has_value(), "source needs a budget");
    require(src.profile.kind() == ProfileKind::Binary, "source profile must be binary");
    for (Individual a : src.aplus)
        require(src.profile.self_qualifies(a) == adding,
                adding ? "targets must qualify themselves" : "targets must disqualify themselves");

    const int n0 = src.n();
    const int extra = adding ? c->t : c->s;
    if (n0 + extra > kMaxIndividuals)
        throw Error(Errc::InstanceTooLarge, "augmented instance exceeds 64 individuals");
    Profile p(n0 + extra);
    std::vector<std::string> names = src.profile.names();
    for (int i = 1; i <= extra; ++i) {
        std::string name = "z" + std::to_string(i);
        require(!src.profile.find(name), "gadget name already in use");
        names.push_back(name);
    }
    p.set_names(std::move(names));
    for (Individual a = 0; a < n0; ++a)
        for (Individual b = 0; b < n0; ++b)
            p.set(a, b, src.profile.at(a, b));

    const Individual d1 = n0;
    AttackInstance out = src;
    if (adding) {
        // Gadget rows disqualify everyone; originals qualify d1.
        for (Individual a = 0; a < n0; ++a)
            p.set(a, d1, Cell::Pos);
        for (int i = 0; i + 1 < extra; ++i)
            out.pool.insert(n0 + i);
    } else {
        // Gadget rows qualify everyone; originals disqualify d1.
        for (int i = 0; i < extra; ++i)
            for (Individual b = 0; b < n0 + extra; ++b)
                p.set(n0 + i, b, Cell::Pos);
    }
    out.profile = std::move(p);
    out.objective = Objective::General;
    out.aminus = IndividualSet::single(d1);
    if (increment_budget)
        *out.budget += 1;
    out.r_restriction.reset();
    return out;
}

AttackInstance gen_random_instance(const InstanceShape& shape, std::uint64_t seed)
{
    if (shape.rules.empty() || shape.objectives.empty() || shape.n_min < 1 || shape.n_max < shape.n_min)
        throw Error(Errc::InvalidArgument, "instance shape needs rules, objectives and 1 <= n_min <= n_max");
    check_size(shape.n_max);
    Rng rng(seed);
    for (int attempt = 0; attempt < shape.max_attempts; ++attempt) {
        AttackInstance in;
        const int n = rng.between(shape.n_min, shape.n_max);
        in.rule = rng.pick(shape.rules);
        in.family = shape.family;
        in.objective = rng.pick(shape.objectives);
        if (shape.r) {
            if (*shape.r > n)
                continue;
            in.profile = fill_r_profile(rng, n, *shape.r);
            in.r_restriction = shape.r;
        } else {
            in.profile = fill_profile(rng, n, shape.ternary ? ProfileKind::Ternary : ProfileKind::Binary,
                                      shape.indifferent_density);
        }
        if (!is_applicable(in.rule, in.profile))
            continue;

        IndividualSet domain = in.profile.everyone();
        if (in.family == Family::GCAI) {
            in.pool = random_nonempty_subset(rng, domain, 0.5);
            domain = in.pool;
        }
        switch (in.objective) {
        case Objective::Constructive: in.aplus = random_nonempty_subset(rng, domain, 0.4); break;
        case Objective::Destructive: in.aminus = random_nonempty_subset(rng, domain, 0.4); break;
        case Objective::Exact:
            in.aplus = random_subset(rng, domain, 0.5);
            in.aminus = domain - in.aplus;
            break;
        case Objective::General:
            for (Individual a : domain) {
                auto roll = rng.below(3);
                if (roll == 0)
                    in.aplus.insert(a);
                else if (roll == 1)
                    in.aminus.insert(a);
            }
            break;
        }

        if (in.family != Family::GCPI)
            in.budget = rng.between(0, shape.max_budget);
        if (shape.priced && in.family == Family::GB) {
            in.agent_prices.emplace();
            for (int a = 0; a < n; ++a)
                in.agent_prices->push_back(rng.between(1, 3));
        }
        if (shape.priced && in.family == Family::GMB) {
            in.pair_prices.emplace();
            for (int k = 0; k < n * n; ++k)
                in.pair_prices->push_back(rng.between(1, 3));
        }

        auto v = validate(in);
        if (has_errors(v))
            continue;
        if (shape.nontrivial && (!v.empty() || (in.aplus.empty() && in.aminus.empty())))
            continue;
        return in;
    }
    throw Error(Errc::InvalidArgument, "no instance of the requested shape found");
}

PartialInstance gen_random_partial_instance(const PartialShape& shape, std::uint64_t seed)
{
    if (shape.rules.empty() || shape.n_min < 1 || shape.n_max < shape.n_min)
        throw Error(Errc::InvalidArgument, "partial shape needs rules and 1 <= n_min <= n_max");
    check_size(shape.n_max);
    Rng rng(seed);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        PartialInstance out;
        const int n = rng.between(shape.n_min, shape.n_max);
        out.rule = rng.pick(shape.rules);
        if (!is_applicable(out.rule, Profile(n)))
            continue;
        if (shape.r) {
            out.r = rng.between(1, std::min(*shape.r, n));
            out.profile = fill_r_partial(rng, n, *out.r, shape.density);
        } else {
            out.profile = fill_profile(rng, n, ProfileKind::Partial, shape.density);
        }
        int unknown = 0;
        for (Individual a = 0; a < n; ++a)
            unknown += out.profile.undecided_in_row(a).size();
        if (unknown > shape.max_unknown)
            continue;
        out.s = random_nonempty_subset(rng, out.profile.everyone(), 0.4);
        return out;
    }
    throw Error(Errc::InvalidArgument, "no partial instance of the requested shape found");
}

} // namespace gid
