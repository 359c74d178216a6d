#include "g2galois/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "g2galois/errors.hpp"

namespace g2galois {

Permutation Permutation::identity(int degree) {
    Permutation p;
    p.images.resize(degree);
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
}

int Permutation::max_point(const std::string& text) {
    int best = 0;
    int cur = -1;
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            cur = (cur < 0 ? 0 : cur) * 10 + (c - '0');
        } else {
            if (cur > best) best = cur;
            cur = -1;
        }
    }
    if (cur > best) best = cur;
    return best;
}

Permutation Permutation::parse_cycles(const std::string& text, int min_degree) {
    int degree = std::max(min_degree, max_point(text));
    if (degree <= 0)
        throw DataFormatError("cannot infer permutation degree from '" + text + "'");
    Permutation p = identity(degree);

    std::vector<std::vector<int>> cycles;
    std::vector<int>* cur = nullptr;
    int num = -1;
    auto flush_num = [&] {
        if (num < 0) return;
        if (!cur) throw DataFormatError("point outside parentheses in '" + text + "'");
        if (num < 1 || num > degree)
            throw DataFormatError("point out of range in '" + text + "'");
        cur->push_back(num - 1);
        num = -1;
    };
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            num = (num < 0 ? 0 : num) * 10 + (c - '0');
        } else if (c == '(') {
            if (cur) throw DataFormatError("nested '(' in '" + text + "'");
            cycles.emplace_back();
            cur = &cycles.back();
        } else if (c == ')') {
            flush_num();
            if (!cur) throw DataFormatError("unmatched ')' in '" + text + "'");
            cur = nullptr;
        } else if (c == ' ' || c == ',' || c == '\t') {
            flush_num();
        } else if (c == 'e') {
            if (cur) throw DataFormatError("'e' inside a cycle in '" + text + "'");
        } else {
            throw DataFormatError(std::string("unexpected character '") + c +
                                  "' in '" + text + "'");
        }
    }
    flush_num();
    if (cur) throw DataFormatError("unterminated cycle in '" + text + "'");

    std::vector<bool> seen(degree, false);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i];
            int to = cyc[(i + 1) % cyc.size()];
            if (seen[from])
                throw DataFormatError("point repeated across cycles in '" + text + "'");
            seen[from] = true;
            p.images[from] = to;
        }
    }
    return p;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (degree() != other.degree())
        throw std::invalid_argument("composing permutations of different degree");
    Permutation r;
    r.images.resize(images.size());
    for (int i = 0; i < degree(); ++i) r.images[i] = images[other.images[i]];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.images.resize(images.size());
    for (int i = 0; i < degree(); ++i) r.images[images[i]] = i;
    return r;
}

std::string Permutation::cycle_string() const {
    std::vector<bool> seen(images.size(), false);
    std::ostringstream out;
    bool any = false;
    for (int start = 0; start < degree(); ++start) {
        if (seen[start] || images[start] == start) continue;
        any = true;
        out << '(';
        int p = start;
        bool first = true;
        do {
            seen[p] = true;
            if (!first) out << ' ';
            out << (p + 1);
            first = false;
            p = images[p];
        } while (p != start);
        out << ')';
    }
    return any ? out.str() : std::string("e");
}

MatF3 MatF3::mul(const MatF3& o) const {
    MatF3 r;
    r.e[0] = (e[0] * o.e[0] + e[1] * o.e[2]) % 3;
    r.e[1] = (e[0] * o.e[1] + e[1] * o.e[3]) % 3;
    r.e[2] = (e[2] * o.e[0] + e[3] * o.e[2]) % 3;
    r.e[3] = (e[2] * o.e[1] + e[3] * o.e[3]) % 3;
    return r;
}

MatF3 MatF3::inverse() const {
    int d = det();
    if (d == 0) throw NotInvertible("matrix " + to_string() + " is singular mod 3");
    int dinv = (d == 1) ? 1 : 2; // units mod 3 are self-inverse
    MatF3 r;
    r.e[0] = (dinv * e[3]) % 3;
    r.e[1] = (dinv * ((3 - e[1]) % 3)) % 3;
    r.e[2] = (dinv * ((3 - e[2]) % 3)) % 3;
    r.e[3] = (dinv * e[0]) % 3;
    return r;
}

std::string MatF3::to_string() const {
    std::ostringstream out;
    out << "[[" << e[0] << ',' << e[1] << "],[" << e[2] << ',' << e[3] << "]]";
    return out.str();
}

namespace {

struct GroupParts {
    int order = 0;
    std::vector<std::uint8_t> table;
    std::vector<int> inverse;
    std::vector<std::string> labels;
    std::vector<int> generator_indices;
};

// breadth-first closure from the identity over sorted generators; the visit
// order defines the element indices, so equal inputs give equal groups
template <typename Rep, typename Mul, typename Label>
GroupParts closure_from(const std::string& name, std::vector<Rep> gens,
                        const Rep& ident, Mul mul, Label label) {
    if (gens.empty()) throw std::invalid_argument("empty generator set");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::vector<Rep> elems{ident};
    std::map<Rep, int> index{{ident, 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        Rep x = elems[head]; // copy: elems may reallocate below
        for (const Rep& g : gens) {
            Rep y = mul(x, g);
            if (index.emplace(y, static_cast<int>(elems.size())).second) {
                elems.push_back(y);
                if (static_cast<int>(elems.size()) > max_group_order)
                    throw ClosureTooLarge("group generated for '" + name +
                                          "' exceeds " +
                                          std::to_string(max_group_order) +
                                          " elements");
            }
        }
    }

    GroupParts p;
    p.order = static_cast<int>(elems.size());
    p.table.resize(static_cast<std::size_t>(p.order) * p.order);
    for (int i = 0; i < p.order; ++i)
        for (int j = 0; j < p.order; ++j) {
            auto it = index.find(mul(elems[i], elems[j]));
            if (it == index.end()) throw std::logic_error("closure missed a product");
            p.table[static_cast<std::size_t>(i) * p.order + j] =
                static_cast<std::uint8_t>(it->second);
        }
    p.inverse.assign(p.order, -1);
    for (int i = 0; i < p.order; ++i)
        for (int j = 0; j < p.order; ++j)
            if (p.table[static_cast<std::size_t>(i) * p.order + j] == 0)
                p.inverse[i] = j;
    p.labels.reserve(p.order);
    for (const Rep& e : elems) p.labels.push_back(label(e));
    for (const Rep& g : gens) p.generator_indices.push_back(index.at(g));
    return p;
}

} // namespace

FiniteGroup FiniteGroup::from_permutations(const std::string& name,
                                           std::vector<Permutation> gens) {
    if (gens.empty()) throw std::invalid_argument("empty generator set");
    int degree = 0;
    for (const auto& g : gens) degree = std::max(degree, g.degree());
    for (auto& g : gens) // pad shorter generators with fixed points
        while (g.degree() < degree) g.images.push_back(g.degree());

    GroupParts p = closure_from(
        name, std::move(gens), Permutation::identity(degree),
        [](const Permutation& x, const Permutation& g) { return x.compose(g); },
        [](const Permutation& x) { return x.cycle_string(); });

    FiniteGroup r;
    r.name_ = name;
    r.order_ = p.order;
    r.table_ = std::move(p.table);
    r.inverse_ = std::move(p.inverse);
    r.labels_ = std::move(p.labels);
    r.generator_indices_ = std::move(p.generator_indices);
    return r;
}

FiniteGroup FiniteGroup::from_matrices(const std::string& name,
                                       std::vector<MatF3> gens) {
    if (gens.empty()) throw std::invalid_argument("empty generator set");
    for (auto& g : gens) {
        for (int& v : g.e) v = ((v % 3) + 3) % 3;
        if (g.det() == 0)
            throw NotInvertible("matrix " + g.to_string() + " is singular mod 3");
    }

    GroupParts p = closure_from(
        name, std::move(gens), MatF3::identity(),
        [](const MatF3& x, const MatF3& g) { return x.mul(g); },
        [](const MatF3& x) { return x.to_string(); });

    FiniteGroup r;
    r.name_ = name;
    r.order_ = p.order;
    r.table_ = std::move(p.table);
    r.inverse_ = std::move(p.inverse);
    r.labels_ = std::move(p.labels);
    r.generator_indices_ = std::move(p.generator_indices);
    return r;
}

int FiniteGroup::element_order(int x) const {
    int k = 1;
    int y = x;
    while (y != 0) {
        y = mul(y, x);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

void FiniteGroup::check_axioms() const {
    for (int a = 0; a < order_; ++a) {
        if (mul(a, 0) != a || mul(0, a) != a)
            throw std::logic_error("identity axiom violated");
        if (mul(a, inv(a)) != 0 || mul(inv(a), a) != 0)
            throw std::logic_error("inverse axiom violated");
    }
    for (int a = 0; a < order_; ++a) {
        std::vector<bool> row(order_, false);
        std::vector<bool> col(order_, false);
        for (int b = 0; b < order_; ++b) {
            if (row[mul(a, b)] || col[mul(b, a)])
                throw std::logic_error("multiplication table is not a Latin square");
            row[mul(a, b)] = true;
            col[mul(b, a)] = true;
        }
    }
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            for (int c = 0; c < order_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::logic_error("associativity violated");
}

} // namespace g2galois
