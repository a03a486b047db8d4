#include "ramsey/binary.hpp"
#include "ramsey/density.hpp"
#include "ramsey/numbers.hpp"
#include "ramsey/oracles.hpp"

#include <algorithm>
#include <sstream>

namespace ramsey {

std::string rat_to_string(const Rat& q)
{
    std::ostringstream out;
    out << boost::multiprecision::numerator(q);
    if (boost::multiprecision::denominator(q) != 1)
        out << "/" << boost::multiprecision::denominator(q);
    return out.str();
}

std::string rat_to_decimal(const Rat& q, int significant)
{
    if (q == 0)
        return "0";
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    bool neg = num < 0;
    if (neg)
        num = -num;

    // scale so the integer part has `significant` digits, then round
    int int_digits = 0;
    BigInt ip = num / den;
    for (BigInt t = ip; t > 0; t /= 10)
        ++int_digits;
    int exp10 = significant - std::max(int_digits, 1);
    BigInt scaled;
    if (int_digits == 0) {
        // shift until the leading digit appears
        BigInt n = num * 10;
        exp10 = 1;
        while (n / den == 0) {
            n *= 10;
            ++exp10;
        }
        exp10 += significant - 1;
        scaled = num;
        for (int i = 0; i < exp10; ++i)
            scaled *= 10;
        scaled = (2 * scaled + den) / (2 * den);
    }
    else {
        scaled = num;
        for (int i = 0; i < exp10; ++i)
            scaled *= 10;
        scaled = (2 * scaled + den) / (2 * den);
    }
    std::string digits = scaled.str();
    std::string out = neg ? "-" : "";
    if (exp10 <= 0) {
        out += digits;
        for (int i = 0; i < -exp10; ++i)
            out += '0';
        return out;
    }
    if (static_cast<int>(digits.size()) <= exp10) {
        out += "0.";
        for (int i = 0; i < exp10 - static_cast<int>(digits.size()); ++i)
            out += '0';
        // trim trailing zeros of the fraction
        while (digits.size() > 1 && digits.back() == '0')
            digits.pop_back();
        out += digits;
        return out;
    }
    out += digits.substr(0, digits.size() - exp10);
    std::string frac = digits.substr(digits.size() - exp10);
    while (!frac.empty() && frac.back() == '0')
        frac.pop_back();
    if (!frac.empty())
        out += "." + frac;
    return out;
}

// --- SetForm -------------------------------------------------------------

bool SetForm::contains(const Vertex& v) const
{
    for (const auto& r : residues)
        if (v >= r.start && mod_pos(v, r.modulus) == r.residue)
            return true;
    for (const auto& iv : intervals)
        if (v >= iv.lo && v <= iv.hi)
            return true;
    return false;
}

Rat SetForm::density() const
{
    Rat d = 0;
    for (const auto& r : residues)
        d += Rat(1, r.modulus);
    return d;
}

BigInt SetForm::envelope_constant() const
{
    BigInt c = 0;
    for (const auto& r : residues)
        c += r.start + 2 * r.modulus;
    for (const auto& iv : intervals)
        c += iv.hi - iv.lo + 1;
    return c;
}

SetForm SetForm::residue_class(const BigInt& modulus, const BigInt& residue, const BigInt& start)
{
    if (modulus < 1 || residue < 0 || residue >= modulus || start < 1)
        throw std::invalid_argument("bad residue class");
    SetForm f;
    f.residues.push_back({modulus, residue, start});
    return f;
}

SetForm SetForm::finite_interval(const BigInt& lo, const BigInt& hi)
{
    if (lo < 1 || hi < lo)
        throw std::invalid_argument("bad interval");
    SetForm f;
    f.intervals.push_back({lo, hi});
    return f;
}

SetForm SetForm::unioned_with(const SetForm& other) const
{
    SetForm f = *this;
    f.residues.insert(f.residues.end(), other.residues.begin(), other.residues.end());
    f.intervals.insert(f.intervals.end(), other.intervals.begin(), other.intervals.end());
    return f;
}

// --- VertexSetOracle ------------------------------------------------------

std::vector<Vertex> VertexSetOracle::enumerate_upto(const Vertex& t) const
{
    std::vector<Vertex> out;
    for (Vertex v = 1; v <= t; ++v)
        if (contains(v))
            out.push_back(v);
    return out;
}

BigInt VertexSetOracle::count_upto(const Vertex& t) const
{
    BigInt n = 0;
    for (Vertex v = 1; v <= t; ++v)
        if (contains(v))
            ++n;
    return n;
}

VertexSetOracle VertexSetOracle::from_form(std::string name, SetForm form)
{
    VertexSetOracle o;
    o.name = std::move(name);
    auto shared = std::make_shared<SetForm>(std::move(form));
    o.contains = [shared](const Vertex& v) { return shared->contains(v); };
    o.exact_form = *shared;
    return o;
}

VertexSetOracle VertexSetOracle::from_predicate(std::string name, std::function<bool(const Vertex&)> pred)
{
    VertexSetOracle o;
    o.name = std::move(name);
    o.contains = std::move(pred);
    return o;
}

VertexSetOracle VertexSetOracle::all()
{
    auto o = from_form("all", SetForm::all());
    return o;
}

// --- GraphOracle / ColoringOracle ------------------------------------------

std::vector<Vertex> GraphOracle::neighbors_upto(const Vertex& v, const Vertex& t) const
{
    std::vector<Vertex> out;
    if (!has_vertex(v))
        return out;
    for (Vertex u = 1; u <= t; ++u)
        if (u != v && has_vertex(u) && adjacent(u, v))
            out.push_back(u);
    return out;
}

Color ColoringOracle::at(const Vertex& u, const Vertex& v) const
{
    if (!valid_pair(u, v))
        throw std::invalid_argument(name + ": pair {" + u.str() + "," + v.str() +
                                    "} is outside the coloring's domain");
    return color(u, v);
}

std::vector<Vertex> ColoringOracle::neighbors_upto(const Vertex& v, Color c, const Vertex& t) const
{
    std::vector<Vertex> out;
    for (Vertex u = 1; u <= t; ++u)
        if (u != v && valid_pair(u, v) && color(u, v) == c)
            out.push_back(u);
    return out;
}

BigInt ColoringOracle::degree_upto(const Vertex& v, Color c, const Vertex& t) const
{
    BigInt n = 0;
    for (Vertex u = 1; u <= t; ++u)
        if (u != v && valid_pair(u, v) && color(u, v) == c)
            ++n;
    return n;
}

VertexSetOracle ColoringOracle::neighborhood_set(const Vertex& v, Color c) const
{
    ColoringOracle self = *this;
    Vertex center = v;
    VertexSetOracle o;
    o.name = name + ".N" + std::to_string(c) + "(" + v.str() + ")";
    o.contains = [self, center, c](const Vertex& u) {
        return u != center && self.valid_pair(u, center) && self.color(u, center) == c;
    };
    return o;
}

GraphOracle ColoringOracle::color_class_graph(Color c) const
{
    ColoringOracle self = *this;
    GraphOracle g;
    g.name = name + "[color=" + std::to_string(c) + "]";
    g.adjacent = [self, c](const Vertex& u, const Vertex& v) {
        return self.valid_pair(u, v) && self.color(u, v) == c;
    };
    return g;
}

// --- densities --------------------------------------------------------------

std::vector<BigInt> geometric_schedule(const BigInt& limit, const BigInt& start)
{
    std::vector<BigInt> out;
    BigInt t = start;
    while (t < limit) {
        out.push_back(t);
        t = (3 * t + 1) / 2;  // ceil(1.5 * t)
    }
    out.push_back(limit);
    return out;
}

Rat prefix_density(const VertexSetOracle& set, const Vertex& t)
{
    if (t < 1)
        throw std::invalid_argument("prefix_density: horizon must be >= 1");
    return Rat(set.count_upto(t), t);
}

DensityProfile density_profile(const VertexSetOracle& set, const std::vector<BigInt>& schedule)
{
    if (schedule.size() < 2)
        throw std::invalid_argument("density_profile: schedule must have length >= 2");
    for (size_t i = 1; i < schedule.size(); ++i)
        if (schedule[i] <= schedule[i - 1])
            throw std::invalid_argument("density_profile: schedule must be strictly increasing");

    DensityProfile p;
    p.horizons = schedule;
    for (const auto& t : schedule)
        p.samples.push_back(prefix_density(set, t));

    size_t first = std::min<size_t>(kBurnIn, p.samples.size() - 1);
    p.ud_estimate = p.samples[first];
    p.ld_estimate = p.samples[first];
    for (size_t i = first; i < p.samples.size(); ++i) {
        p.ud_estimate = std::max(p.ud_estimate, p.samples[i]);
        p.ld_estimate = std::min(p.ld_estimate, p.samples[i]);
    }
    if (set.exact_form) {
        p.exact = true;
        p.exact_value = set.exact_form->density();
        p.envelope_constant = set.exact_form->envelope_constant();
    }
    return p;
}

Rat exact_density(const VertexSetOracle& set)
{
    if (!set.exact_form)
        throw refusal_error("exact_density: oracle '" + set.name + "' carries no exact form");
    return set.exact_form->density();
}

GrowthFn GrowthFn::identity()
{
    return {"identity", [](const BigInt& n) { return n; }};
}

GrowthFn GrowthFn::sqrt_ceil()
{
    return {"sqrt-ceil", [](const BigInt& n) {
                BigInt r = boost::multiprecision::sqrt(n);
                if (r * r < n)
                    ++r;
                return r;
            }};
}

GrowthFn GrowthFn::log2_ceil()
{
    return {"log2-ceil", [](const BigInt& n) {
                if (n <= 1)
                    return BigInt(1);
                unsigned bl = bit_length(n - 1);
                return BigInt(bl);
            }};
}

GrowthFn GrowthFn::linear(const BigInt& a, const BigInt& b)
{
    return {"linear", [a, b](const BigInt& n) { return a * n + b; }};
}

ZfProfile zf_membership_profile(const VertexSetOracle& set, const GrowthFn& f,
                                const std::vector<BigInt>& schedule)
{
    if (schedule.empty())
        throw std::invalid_argument("zf_membership_profile: empty schedule");
    ZfProfile p;
    p.horizons = schedule;
    BigInt prev_f = 0;
    for (const auto& n : schedule) {
        BigInt fn = f.eval(n);
        if (fn <= 0)
            throw std::invalid_argument("zf_membership_profile: f must be positive on the schedule");
        if (fn < prev_f)
            throw std::invalid_argument("zf_membership_profile: f must be nondecreasing");
        prev_f = fn;
        p.ratios.push_back(Rat(set.count_upto(n), fn));
    }

    size_t first = std::min<size_t>(kBurnIn, p.ratios.size() - 1);
    bool all_zero = true, strictly_down = true, strictly_up = true;
    for (size_t i = first; i < p.ratios.size(); ++i) {
        if (p.ratios[i] != 0)
            all_zero = false;
        if (i > first) {
            if (p.ratios[i] >= p.ratios[i - 1])
                strictly_down = false;
            if (p.ratios[i] <= p.ratios[i - 1])
                strictly_up = false;
        }
    }
    if (p.ratios.size() - first < 2)
        strictly_down = strictly_up = false;
    if (all_zero || strictly_down)
        p.trend = ZfTrend::Vanishing;
    else if (strictly_up)
        p.trend = ZfTrend::Diverging;
    else
        p.trend = ZfTrend::Bounded;
    return p;
}

const char* zf_trend_name(ZfTrend t)
{
    switch (t) {
    case ZfTrend::Vanishing: return "vanishing-trend";
    case ZfTrend::Bounded: return "bounded-trend";
    case ZfTrend::Diverging: return "diverging-trend";
    }
    return "?";
}

// --- truncated binary expansions ---------------------------------------------

std::string truncated_binary(const BigInt& n)
{
    if (n < 1)
        throw std::invalid_argument("truncated_binary: n must be >= 1");
    unsigned bl = bit_length(n);
    std::string out;
    for (unsigned i = bl - 1; i >= 1; --i)
        out += boost::multiprecision::bit_test(n, i - 1) ? '1' : '0';
    return out;
}

bool extends(const BigInt& s, const BigInt& t)
{
    if (s < 1 || t < 1)
        throw std::invalid_argument("extends: arguments must be >= 1");
    if (s > t)
        return false;
    unsigned k = bit_length(s) - 1;
    if (k == 0)
        return true;  // <1> = N
    BigInt m = BigInt(1) << k;
    return mod_pos(t, m) == mod_pos(s, m);
}

VertexSetOracle cylinder(const BigInt& s)
{
    if (s < 1)
        throw std::invalid_argument("cylinder: s must be >= 1");
    unsigned k = bit_length(s) - 1;
    BigInt m = BigInt(1) << k;
    SetForm form = SetForm::residue_class(m, mod_pos(s, m), s);
    auto o = VertexSetOracle::from_form("<" + s.str() + ">", form);
    return o;
}

std::optional<NwdWitness> nwd_witness_search(const VertexSetOracle& set, const BigInt& s,
                                             const BigInt& horizon)
{
    if (s < 1 || horizon < s)
        throw std::invalid_argument("nwd_witness_search: need s >= 1 and horizon >= s");
    std::vector<Vertex> members = set.enumerate_upto(horizon);
    unsigned k = bit_length(s) - 1;
    BigInt step = BigInt(1) << k;
    for (BigInt t = s; t <= horizon; t += step) {
        bool hit = false;
        for (const auto& a : members) {
            if (extends(t, a)) {
                hit = true;
                break;
            }
        }
        if (!hit)
            return NwdWitness{t, horizon};
    }
    return std::nullopt;
}

} // namespace ramsey
