#include "perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stsurf {

Perm::Perm(int n) : img_(n), pre_(n) {
    std::iota(img_.begin(), img_.end(), 0);
    std::iota(pre_.begin(), pre_.end(), 0);
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    const int n = static_cast<int>(img_.size());
    pre_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int j = img_[i];
        if (j < 0 || j >= n || pre_[j] != -1)
            throw std::invalid_argument("Perm: image list is not a bijection");
        pre_[j] = i;
    }
}

Perm Perm::inverse() const {
    Perm r;
    r.img_ = pre_;
    r.pre_ = img_;
    return r;
}

Perm Perm::operator*(const Perm& o) const {
    if (size() != o.size()) throw std::invalid_argument("Perm: size mismatch");
    std::vector<int> im(size());
    for (int i = 0; i < size(); ++i) im[i] = img_[o.img_[i]];
    return Perm(std::move(im));
}

int Perm::pow_apply(int i, long long k) const {
    int len = cycle_length_of(i);
    long long r = k % len;
    if (r < 0) r += len;
    for (long long j = 0; j < r; ++j) i = img_[i];
    return i;
}

bool Perm::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(size(), 0);
    for (int i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        int j = i;
        do {
            seen[j] = 1;
            cyc.push_back(j);
            j = img_[j];
        } while (j != i);
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<int> Perm::cycle_lengths_desc() const {
    std::vector<int> lens;
    for (const auto& c : cycles()) lens.push_back(static_cast<int>(c.size()));
    std::sort(lens.rbegin(), lens.rend());
    return lens;
}

int Perm::order_lcm() const {
    long long l = 1;
    for (const auto& c : cycles()) l = std::lcm(l, static_cast<long long>(c.size()));
    if (l > std::numeric_limits<int>::max())
        throw std::overflow_error("Perm::order_lcm overflow");
    return static_cast<int>(l);
}

int Perm::sign() const {
    int transpositions = 0;
    for (const auto& c : cycles()) transpositions += static_cast<int>(c.size()) - 1;
    return (transpositions % 2 == 0) ? 1 : -1;
}

int Perm::cycle_length_of(int i) const {
    int len = 1;
    for (int j = img_[i]; j != i; j = img_[j]) ++len;
    return len;
}

std::optional<Perm> Perm::parse(const std::string& text, int n) {
    if (text.find('(') != std::string::npos) return parse_cycles(text, n);
    return parse_images(text, n);
}

std::optional<Perm> Perm::parse_cycles(const std::string& text, int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    std::vector<char> used(n, 0);
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos; };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(') return std::nullopt;
        ++pos;
        std::vector<int> cyc;
        for (;;) {
            skip_ws();
            if (pos < text.size() && text[pos] == ')') { ++pos; break; }
            size_t start = pos;
            while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
            if (pos == start) return std::nullopt;
            int label = std::stoi(text.substr(start, pos - start));
            if (label < 1 || label > n) return std::nullopt;
            int idx = label - 1;
            if (used[idx]) return std::nullopt;
            used[idx] = 1;
            cyc.push_back(idx);
            skip_ws();
            if (pos < text.size() && (text[pos] == ',' || text[pos] == ';')) ++pos;
        }
        for (size_t k = 0; k < cyc.size(); ++k)
            im[cyc[k]] = cyc[(k + 1) % cyc.size()];
        skip_ws();
    }
    try {
        return Perm(std::move(im));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::optional<Perm> Perm::parse_images(const std::string& text, int n) {
    std::istringstream in(text);
    std::vector<int> im;
    int x;
    while (in >> x) {
        if (x < 1 || x > n) return std::nullopt;
        im.push_back(x - 1);
    }
    if (!in.eof() || static_cast<int>(im.size()) != n) return std::nullopt;
    try {
        return Perm(std::move(im));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string Perm::cycle_string() const {
    std::ostringstream out;
    bool any = false;
    for (const auto& c : cycles()) {
        if (c.size() < 2) continue;
        any = true;
        out << '(';
        for (size_t k = 0; k < c.size(); ++k) {
            if (k) out << ',';
            out << c[k] + 1;
        }
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

std::string Perm::image_string() const {
    std::ostringstream out;
    for (int i = 0; i < size(); ++i) {
        if (i) out << ' ';
        out << img_[i] + 1;
    }
    return out.str();
}

Perm conjugate(const Perm& p, const std::vector<int>& relab) {
    const int n = p.size();
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[relab[i]] = relab[p(i)];
    return Perm(std::move(im));
}

} // namespace stsurf
