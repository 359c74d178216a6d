#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace g2galois {

// hard cap on group order; membership masks elsewhere rely on 64-bit words
inline constexpr int max_group_order = 64;

// permutation of the points 0..degree-1
struct Permutation {
    std::vector<int> images;

    int degree() const { return static_cast<int>(images.size()); }
    int apply(int p) const { return images[p]; }

    static Permutation identity(int degree);

    // parse disjoint-cycle notation with 1-based points, e.g. "(1 2)(3 4 5)".
    // "e" and "()" denote the identity. the result acts on max(min_degree,
    // largest point named) points.
    static Permutation parse_cycles(const std::string& text, int min_degree = 0);

    // largest 1-based point named in a cycle string (0 if none)
    static int max_point(const std::string& text);

    Permutation compose(const Permutation& other) const; // apply other, then this
    Permutation inverse() const;

    // canonical disjoint-cycle form: each cycle starts at its smallest point,
    // cycles ordered by smallest point; the identity prints as "e"
    std::string cycle_string() const;

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return images < o.images; }
};

// 2x2 matrix over F_3, row-major entries in {0,1,2}
struct MatF3 {
    std::array<int, 4> e{1, 0, 0, 1};

    static MatF3 identity() { return MatF3{}; }
    int det() const { return ((e[0] * e[3] - e[1] * e[2]) % 3 + 3) % 3; }
    MatF3 mul(const MatF3& o) const;
    MatF3 inverse() const; // throws NotInvertible on det == 0
    std::string to_string() const;

    bool operator==(const MatF3&) const = default;
    bool operator<(const MatF3& o) const { return e < o.e; }
};

// finite group stored as a full multiplication table. element 0 is the
// identity; the element order is fixed by breadth-first closure from the
// identity over the generators (generators sorted by representation first),
// so building twice from equal inputs yields identical tables and labels.
class FiniteGroup {
public:
    static FiniteGroup from_permutations(const std::string& name,
                                         std::vector<Permutation> gens);
    static FiniteGroup from_matrices(const std::string& name,
                                     std::vector<MatF3> gens);

    const std::string& name() const { return name_; }
    int order() const { return order_; }
    int identity() const { return 0; }
    int mul(int a, int b) const { return table_[a * order_ + b]; }
    int inv(int a) const { return inverse_[a]; }
    int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }
    int element_order(int x) const;
    bool is_abelian() const;
    const std::string& element_label(int x) const { return labels_[x]; }
    const std::vector<std::string>& element_labels() const { return labels_; }
    const std::vector<int>& generators() const { return generator_indices_; }

    // exhaustive audit of the group axioms on the stored table; throws
    // std::logic_error on any violation. test hook, not a hot path.
    void check_axioms() const;

private:
    FiniteGroup() = default;

    std::string name_;
    int order_ = 0;
    std::vector<std::uint8_t> table_; // order_ x order_, row-major
    std::vector<int> inverse_;
    std::vector<std::string> labels_;
    std::vector<int> generator_indices_;
};

} // namespace g2galois
