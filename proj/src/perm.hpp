#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace stsurf {

// Permutation of {0, ..., n-1}. Text I/O is 1-based (the usual convention for
// square labels); everything internal is 0-based.
class Perm {
public:
    Perm() = default;
    explicit Perm(int n);                       // identity
    explicit Perm(std::vector<int> images);     // validates bijectivity

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    int inv(int i) const { return pre_[i]; }

    const std::vector<int>& images() const { return img_; }

    Perm inverse() const;
    Perm operator*(const Perm& o) const;        // (p*q)(i) = p(q(i))
    int pow_apply(int i, long long k) const;    // p^k(i), k may be negative

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    std::strong_ordering operator<=>(const Perm& o) const { return img_ <=> o.img_; }

    bool is_identity() const;
    std::vector<std::vector<int>> cycles() const;   // incl. fixed points; each cycle
                                                    // starts at its least element;
                                                    // cycles sorted by least element
    std::vector<int> cycle_lengths_desc() const;
    int order_lcm() const;                          // lcm of cycle lengths (fits int here)
    int sign() const;                               // +1 or -1
    int cycle_length_of(int i) const;

    // Parsers accept either cycle notation "(1,2)(3 4)" (fixed points may be
    // omitted or written as singletons) or a 1-based image list "2 1 4 3".
    static std::optional<Perm> parse(const std::string& text, int n);
    static std::optional<Perm> parse_cycles(const std::string& text, int n);
    static std::optional<Perm> parse_images(const std::string& text, int n);

    std::string cycle_string() const;   // "(1,2)(3,4)"; identity prints "()"
    std::string image_string() const;   // "2 1 4 3"

private:
    std::vector<int> img_;
    std::vector<int> pre_;
};

// Simultaneous conjugation: relabeled pair (r∘h∘r⁻¹, r∘v∘r⁻¹).
Perm conjugate(const Perm& p, const std::vector<int>& relab);

} // namespace stsurf
