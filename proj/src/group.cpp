#include "powg/group.hpp"

#include "powg/errors.hpp"

#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

namespace powg {

bool is_odd_prime(std::int64_t p)
{
    if (p < 3 || p % 2 == 0)
        return false;
    for (std::int64_t d = 3; d <= p / d; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

void FamilyParams::validate() const
{
    if (k < 2)
        throw InvalidInput{"k must be at least 2 (got " + std::to_string(k) + ")"};
    if (!is_odd_prime(p))
        throw InvalidInput{"p must be an odd prime (got " + std::to_string(p) + ")"};
    // 2^(k+1) p < 2^62
    if (k + 1 >= 62 || p >= (std::int64_t{1} << (62 - (k + 1))))
        throw InvalidInput{"group order 2^(k+1) p overflows the exact integer range"};
}

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table, std::vector<std::string> labels,
                         std::string associativity_check, std::optional<FamilyParams> family)
    : order_(order), table_(std::move(table)), inverses_(order, 0), labels_(std::move(labels)),
      associativity_check_(std::move(associativity_check)), family_(family)
{
    for (Element x = 0; x < order_; ++x)
        for (Element y = 0; y < order_; ++y)
            if (mult(x, y) == 0) {
                inverses_[x] = y;
                break;
            }
}

Element FiniteGroup::power(Element x, std::uint64_t t) const
{
    Element result = identity();
    Element base = x;
    while (t) {
        if (t & 1)
            result = mult(result, base);
        base = mult(base, base);
        t >>= 1;
    }
    return result;
}

namespace {

std::string power_label(const std::string& base, std::int64_t e)
{
    if (e == 1)
        return base;
    return base + "^" + std::to_string(e);
}

std::string family_label(const FamilyParams& params, std::int64_t a, int b)
{
    if (b == 0)
        return a == 0 ? "e" : power_label("r", a);
    // r^a s = s r^(a m), since conjugation by s is the involution r -> r^m.
    std::int64_t c = static_cast<std::int64_t>((static_cast<__int128>(a) * params.twist()) % params.n());
    return c == 0 ? "s" : "s·" + power_label("r", c);
}

void check_materializable(std::size_t order)
{
    if (order > max_materialized_order)
        throw InvalidInput{"group order " + std::to_string(order) + " exceeds the materialization limit of " +
                           std::to_string(max_materialized_order)};
}

}  // namespace

Element family_element(const FamilyParams& params, std::int64_t a, int b)
{
    std::int64_t n = params.n();
    a %= n;
    if (a < 0)
        a += n;
    return static_cast<Element>(a + b * n);
}

FiniteGroup build_family(const FamilyParams& params)
{
    params.validate();
    const auto order = static_cast<std::size_t>(params.order());
    check_materializable(order);

    const std::int64_t n = params.n();
    const std::int64_t m = params.twist();
    std::vector<Element> table(order * order);
    std::vector<std::string> labels(order);
    for (std::size_t x = 0; x < order; ++x) {
        std::int64_t a1 = static_cast<std::int64_t>(x) % n;
        int b1 = static_cast<int>(static_cast<std::int64_t>(x) / n);
        labels[x] = family_label(params, a1, b1);
        for (std::size_t y = 0; y < order; ++y) {
            std::int64_t a2 = static_cast<std::int64_t>(y) % n;
            int b2 = static_cast<int>(static_cast<std::int64_t>(y) / n);
            std::int64_t a = (a1 + (b1 ? a2 * m : a2)) % n;
            table[x * order + y] = family_element(params, a, b1 ^ b2);
        }
    }

    FiniteGroup g{order, std::move(table), std::move(labels), "constructive", params};

    // relations r^(2^k p) = s^2 = e and s r s^-1 = r^m
    const Element r = family_element(params, 1, 0);
    const Element s = family_element(params, 0, 1);
    if (g.power(r, static_cast<std::uint64_t>(n)) != g.identity() || g.mult(s, s) != g.identity() ||
        g.mult(g.mult(s, r), g.inverse(s)) != family_element(params, m, 0))
        throw Error{"family construction violates its defining relations"};
    return g;
}

FiniteGroup build_cyclic(std::size_t n)
{
    if (n == 0)
        throw InvalidInput{"cyclic group order must be positive"};
    check_materializable(n);
    std::vector<Element> table(n * n);
    std::vector<std::string> labels(n);
    for (std::size_t x = 0; x < n; ++x) {
        labels[x] = std::to_string(x);
        for (std::size_t y = 0; y < n; ++y)
            table[x * n + y] = static_cast<Element>((x + y) % n);
    }
    return FiniteGroup{n, std::move(table), std::move(labels), "constructive"};
}

FiniteGroup make_group_from_table(std::size_t n, std::vector<Element> table, std::vector<std::string> labels)
{
    if (n == 0)
        throw NotAGroup{"empty table"};
    if (table.size() != n * n)
        throw NotAGroup{"table has " + std::to_string(table.size()) + " entries, expected " + std::to_string(n * n)};
    auto at = [&](std::size_t x, std::size_t y) { return table[x * n + y]; };

    for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i] >= n)
            throw NotAGroup{"entry at row " + std::to_string(i / n) + " column " + std::to_string(i % n) +
                            " is out of range: " + std::to_string(table[i])};

    auto is_identity = [&](std::size_t e) {
        for (std::size_t x = 0; x < n; ++x)
            if (at(e, x) != x || at(x, e) != x)
                return false;
        return true;
    };
    if (!is_identity(0)) {
        for (std::size_t e = 1; e < n; ++e)
            if (is_identity(e))
                throw NotAGroup{"identity not at index 0 (element " + std::to_string(e) + " is the identity)"};
        throw NotAGroup{"no identity element"};
    }

    for (std::size_t x = 0; x < n; ++x) {
        bool found = false;
        for (std::size_t y = 0; y < n && !found; ++y)
            found = at(x, y) == 0 && at(y, x) == 0;
        if (!found)
            throw NotAGroup{"element " + std::to_string(x) + " has no inverse"};
    }

    auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
        if (at(at(a, b), c) != at(a, at(b, c)))
            throw NotAGroup{"associativity fails for triple (" + std::to_string(a) + ", " + std::to_string(b) +
                            ", " + std::to_string(c) + ")"};
    };
    std::string assoc;
    if (n <= full_associativity_limit) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    check_triple(a, b, c);
        assoc = "full";
    }
    else {
        const std::size_t samples = 10 * n * n;
        std::mt19937_64 rng{0x5eed'0f'a550c1a7ull};
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t i = 0; i < samples; ++i)
            check_triple(pick(rng), pick(rng), pick(rng));
        assoc = "sampled:" + std::to_string(samples);
    }

    if (labels.empty()) {
        labels.resize(n);
        for (std::size_t x = 0; x < n; ++x)
            labels[x] = std::to_string(x);
    }
    std::unordered_set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second)
            throw InvalidInput{"duplicate element label '" + l + "'"};

    return FiniteGroup{n, std::move(table), std::move(labels), std::move(assoc)};
}

FiniteGroup load_cayley_table(std::string_view text)
{
    std::vector<std::string> lines;
    {
        std::string line;
        std::istringstream in{std::string{text}};
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            lines.push_back(line);
        }
    }
    auto line_error = [](std::size_t idx, const std::string& msg) {
        return ParseError{"line " + std::to_string(idx + 1) + ": " + msg};
    };

    std::size_t li = 0;
    auto skip_blank = [&] {
        while (li < lines.size() && lines[li].find_first_not_of(" \t") == std::string::npos)
            ++li;
    };

    skip_blank();
    if (li >= lines.size())
        throw ParseError{"empty input"};
    long long n = 0;
    {
        std::istringstream ls{lines[li]};
        std::string rest;
        if (!(ls >> n) || (ls >> rest) || n <= 0)
            throw line_error(li, "expected a positive element count");
    }
    if (static_cast<std::size_t>(n) > max_materialized_order)
        throw line_error(li, "order " + std::to_string(n) + " exceeds the limit of " +
                                 std::to_string(max_materialized_order));
    ++li;

    const auto order = static_cast<std::size_t>(n);
    std::vector<Element> table;
    table.reserve(order * order);
    for (std::size_t row = 0; row < order; ++row, ++li) {
        if (li >= lines.size())
            throw ParseError{"expected " + std::to_string(order) + " table rows, found " + std::to_string(row)};
        std::istringstream ls{lines[li]};
        std::string tok;
        std::size_t cols = 0;
        while (ls >> tok) {
            std::size_t pos = 0;
            unsigned long long v = 0;
            try {
                v = std::stoull(tok, &pos);
            }
            catch (const std::exception&) {
                pos = 0;
            }
            if (pos != tok.size() || tok[0] == '-')
                throw line_error(li, "not a non-negative integer: '" + tok + "'");
            if (v >= order)
                throw line_error(li, "element index " + tok + " out of range");
            table.push_back(static_cast<Element>(v));
            ++cols;
        }
        if (cols != order)
            throw line_error(li, "expected " + std::to_string(order) + " entries, found " + std::to_string(cols));
    }

    std::vector<std::string> labels(order);
    for (std::size_t x = 0; x < order; ++x)
        labels[x] = std::to_string(x);
    for (; li < lines.size(); ++li) {
        const std::string& line = lines[li];
        if (line.find_first_not_of(" \t") == std::string::npos)
            continue;
        std::istringstream ls{line};
        std::string kw;
        long long idx = -1;
        ls >> kw;
        if (kw != "label" || !(ls >> idx))
            throw line_error(li, "expected 'label <index> <string>'");
        if (idx < 0 || static_cast<std::size_t>(idx) >= order)
            throw line_error(li, "label index out of range");
        std::string value;
        std::getline(ls >> std::ws, value);
        if (value.empty())
            throw line_error(li, "empty label");
        labels[static_cast<std::size_t>(idx)] = value;
    }

    return make_group_from_table(order, std::move(table), std::move(labels));
}

std::uint64_t element_order(const FiniteGroup& g, Element x)
{
    std::uint64_t t = 1;
    for (Element c = x; c != g.identity(); c = g.mult(c, x))
        ++t;
    return t;
}

VertexSet cyclic_subgroup(const FiniteGroup& g, Element x)
{
    VertexSet s(g.order());
    s.insert(g.identity());
    for (Element c = x; c != g.identity(); c = g.mult(c, x))
        s.insert(c);
    return s;
}

std::vector<Element> GroupPartition::rotations() const
{
    std::set<Element> all{h0.begin(), h0.end()};
    all.insert(h1.begin(), h1.end());
    return {all.begin(), all.end()};
}

GroupPartition partition(const FiniteGroup& g, const FamilyParams& params)
{
    if (!g.family() || !(*g.family() == params))
        throw InvalidInput{"partition requires a group built by build_family with the same (k, p)"};

    const std::int64_t n = params.n();
    const std::int64_t h = params.half();
    GroupPartition part;
    part.u = family_element(params, h, 0);
    part.h0 = {g.identity(), part.u};
    for (std::int64_t a = 1; a < n; ++a)
        if (a != h)
            part.h1.push_back(family_element(params, a, 0));

    // s r^c = r^(c m) s; exponents taken mod 2^k p, so H2 = {s r^(2t)} has 2^(k-1) p elements.
    auto s_times_r = [&](std::int64_t c) {
        std::int64_t a = static_cast<std::int64_t>((static_cast<__int128>(c) * params.twist()) % n);
        return family_element(params, a, 1);
    };
    for (std::int64_t t = 0; t < h; ++t) {
        part.h2.push_back(s_times_r(2 * t));
        part.h3.push_back(s_times_r(2 * t + 1));
    }
    for (std::int64_t j = 0; j < params.quarter(); ++j)
        part.partner_pairs.emplace_back(s_times_r(2 * j + 1), s_times_r(2 * j + 1 + h));
    return part;
}

}  // namespace powg
