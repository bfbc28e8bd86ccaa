#ifndef G2LAB_FACE_HPP
#define G2LAB_FACE_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "g2lab/errors.hpp"

namespace g2lab {

using Vertex = int;

/// A face of an abstract simplicial complex: a strictly increasing list of
/// vertex ids. The empty face represents ∅ and is a member of every complex.
class Face {
public:
    Face() = default;

    explicit Face(std::vector<Vertex> verts) : verts_(std::move(verts)) {
        std::sort(verts_.begin(), verts_.end());
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            if (verts_[i] < 0)
                throw invalid_input("face contains a negative vertex id");
            if (i > 0 && verts_[i] == verts_[i - 1])
                throw invalid_input("face contains a duplicate vertex");
        }
    }

    Face(std::initializer_list<Vertex> verts) : Face(std::vector<Vertex>(verts)) {}

    const std::vector<Vertex>& verts() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    bool empty() const { return verts_.empty(); }
    int dim() const { return static_cast<int>(verts_.size()) - 1; }

    bool contains(Vertex v) const {
        return std::binary_search(verts_.begin(), verts_.end(), v);
    }

    bool is_subset_of(const Face& other) const {
        return std::includes(other.verts_.begin(), other.verts_.end(),
                             verts_.begin(), verts_.end());
    }

    bool intersects(const Face& other) const {
        auto a = verts_.begin();
        auto b = other.verts_.begin();
        while (a != verts_.end() && b != other.verts_.end()) {
            if (*a < *b) ++a;
            else if (*b < *a) ++b;
            else return true;
        }
        return false;
    }

    Face united(const Face& other) const {
        std::vector<Vertex> out;
        out.reserve(verts_.size() + other.verts_.size());
        std::set_union(verts_.begin(), verts_.end(),
                       other.verts_.begin(), other.verts_.end(),
                       std::back_inserter(out));
        return Face(Raw{}, std::move(out));
    }

    Face minus(const Face& other) const {
        std::vector<Vertex> out;
        std::set_difference(verts_.begin(), verts_.end(),
                            other.verts_.begin(), other.verts_.end(),
                            std::back_inserter(out));
        return Face(Raw{}, std::move(out));
    }

    Face intersected(const Face& other) const {
        std::vector<Vertex> out;
        std::set_intersection(verts_.begin(), verts_.end(),
                              other.verts_.begin(), other.verts_.end(),
                              std::back_inserter(out));
        return Face(Raw{}, std::move(out));
    }

    /// Face with the vertex at position `i` removed.
    Face without_index(std::size_t i) const {
        std::vector<Vertex> out = verts_;
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
        return Face(Raw{}, std::move(out));
    }

    Face with_vertex(Vertex v) const {
        std::vector<Vertex> out = verts_;
        out.insert(std::upper_bound(out.begin(), out.end(), v), v);
        return Face(Raw{}, std::move(out));
    }

    auto operator<=>(const Face&) const = default;

private:
    struct Raw {}; // already sorted and duplicate-free
    Face(Raw, std::vector<Vertex> verts) : verts_(std::move(verts)) {}

    std::vector<Vertex> verts_;
};

} // namespace g2lab

#endif
