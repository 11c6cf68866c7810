#include "ggt/hull/tree_space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ggt {

TreePoint TreePoint::on_edge(const FreeWord& base, int letter, const Rat& offset) {
    if (letter == 0) throw validation_error("edge letter cannot be 0");
    if (offset < 0 || offset >= 1) {
        if (offset == 1) return TreePoint(base * FreeWord::from_letters({letter}), 0, Rat(0));
        throw validation_error("edge offset must lie in [0, 1]");
    }
    if (offset == 0) return TreePoint(base, 0, Rat(0));
    // Orient outward: base must be the shorter endpoint.
    const auto& letters = base.letters();
    if (!letters.empty() && letters.back() == -letter) {
        // base * letter cancels: flip to the other endpoint.
        FreeWord other = base * FreeWord::from_letters({letter});
        return TreePoint(other, -letter, Rat(1) - offset);
    }
    return TreePoint(base, letter, offset);
}

std::string TreePoint::str() const {
    if (is_vertex()) return base_.str();
    std::ostringstream os;
    os << base_.str() << "-[" << FreeWord::from_letters({letter_}).str() << "]-"
       << rat_to_string(offset_);
    return os.str();
}

namespace {

// Anchors: (vertex word, rational offset to the point). A vertex point has
// one anchor; an edge point has both endpoints.
struct Anchors {
    FreeWord v[2];
    Rat off[2];
    int count;
};

Anchors anchors_of(const TreePoint& p) {
    Anchors a;
    if (p.is_vertex()) {
        a.v[0] = p.base();
        a.off[0] = 0;
        a.count = 1;
    } else {
        a.v[0] = p.base();
        a.off[0] = p.offset();
        a.v[1] = p.base() * FreeWord::from_letters({p.letter()});
        a.off[1] = Rat(1) - p.offset();
        a.count = 2;
    }
    return a;
}

long common_prefix(const FreeWord& a, const FreeWord& b) {
    long c = 0;
    long lim = static_cast<long>(std::min(a.length(), b.length()));
    while (c < lim && a.letters()[c] == b.letters()[c]) ++c;
    return c;
}

Rat vertex_distance(const FreeWord& a, const FreeWord& b) {
    long c = common_prefix(a, b);
    return Rat(static_cast<long>(a.length()) + static_cast<long>(b.length()) - 2 * c);
}

bool same_edge(const TreePoint& p, const TreePoint& q) {
    return !p.is_vertex() && !q.is_vertex() && p.base() == q.base() && p.letter() == q.letter();
}

}  // namespace

Rat tree_distance(const TreePoint& p, const TreePoint& q) {
    if (same_edge(p, q)) return rat_abs(p.offset() - q.offset());
    Anchors ap = anchors_of(p), aq = anchors_of(q);
    Rat best(-1);
    for (int i = 0; i < ap.count; ++i)
        for (int j = 0; j < aq.count; ++j) {
            Rat d = ap.off[i] + vertex_distance(ap.v[i], aq.v[j]) + aq.off[j];
            if (best < 0 || d < best) best = d;
        }
    return best;
}

namespace {

// Vertex at integer distance k from `a` along the vertex path a -> b.
FreeWord path_vertex(const FreeWord& a, const FreeWord& b, long k) {
    long c = common_prefix(a, b);
    long up = static_cast<long>(a.length()) - c;
    if (k <= up) {
        std::vector<int> letters(a.letters().begin(), a.letters().end() - k);
        return FreeWord::from_letters(letters);
    }
    long down = k - up;
    std::vector<int> letters(b.letters().begin(), b.letters().begin() + c + down);
    return FreeWord::from_letters(letters);
}

}  // namespace

TreePoint tree_point_at(const TreePoint& p, const TreePoint& q, const Rat& s) {
    Rat total = tree_distance(p, q);
    if (s < 0 || s > total) throw validation_error("tree_point_at: parameter out of range");
    if (p == q || s == 0) return p;
    if (s == total) return q;

    if (same_edge(p, q)) {
        Rat off = p.offset() < q.offset() ? Rat(p.offset() + s) : Rat(p.offset() - s);
        return TreePoint::on_edge(p.base(), p.letter(), off);
    }

    // Pick the anchor pair realizing the distance; the geodesic is
    // p -> va (off_a) -> vertex path -> vb (off_b) -> q.
    Anchors ap = anchors_of(p), aq = anchors_of(q);
    int bi = 0, bj = 0;
    Rat best(-1);
    for (int i = 0; i < ap.count; ++i)
        for (int j = 0; j < aq.count; ++j) {
            Rat d = ap.off[i] + vertex_distance(ap.v[i], aq.v[j]) + aq.off[j];
            if (best < 0 || d < best) {
                best = d;
                bi = i;
                bj = j;
            }
        }
    const FreeWord& va = ap.v[bi];
    const FreeWord& vb = aq.v[bj];
    Rat off_a = ap.off[bi], off_b = aq.off[bj];
    Rat mid = vertex_distance(va, vb);

    if (s <= off_a) {
        // Still on p's edge, walking toward the chosen endpoint va.
        if (bi == 0) return TreePoint::on_edge(p.base(), p.letter(), p.offset() - s);
        return TreePoint::on_edge(p.base(), p.letter(), p.offset() + s);
    }
    Rat s2 = s - off_a;
    if (s2 <= mid) {
        // On the vertex path: integer part + fractional step.
        Int fl_num = s2.get_num() / s2.get_den();
        long k = static_cast<long>(fl_num.get_si());
        Rat frac = s2 - Rat(fl_num);
        FreeWord w = path_vertex(va, vb, k);
        if (frac == 0) return TreePoint::vertex(w);
        FreeWord wn = path_vertex(va, vb, k + 1);
        // Edge letter from w to wn (on_edge re-canonicalizes if we climb).
        int letter;
        if (wn.length() > w.length())
            letter = wn.letters()[wn.length() - 1];
        else
            letter = -w.letters()[w.length() - 1];
        return TreePoint::on_edge(w, letter, frac);
    }
    // Into q's edge, at distance s3 from the endpoint vb.
    Rat s3 = s2 - mid;
    if (bj == 0) return TreePoint::on_edge(q.base(), q.letter(), s3);
    return TreePoint::on_edge(q.base(), q.letter(), Rat(1) - s3);
}

Rat product_distance2(const ProductPoint& p, const ProductPoint& q) {
    if (p.vec.size() != q.vec.size()) throw validation_error("product point dims differ");
    Rat dt = tree_distance(p.tree, q.tree);
    Rat s = dt * dt;
    for (size_t i = 0; i < p.vec.size(); ++i) {
        Rat d = p.vec[i] - q.vec[i];
        s += d * d;
    }
    return s;
}

double product_distance(const ProductPoint& p, const ProductPoint& q) {
    return std::sqrt(to_double(product_distance2(p, q)));
}

double GeodesicPath::length() const {
    return std::sqrt(to_double(tree_length * tree_length + euclid_len2));
}

ProductPoint GeodesicPath::at(const Rat& t) const {
    if (t < 0 || t > 1) throw validation_error("geodesic parameter out of [0,1]");
    ProductPoint r;
    r.tree = tree_point_at(from.tree, to.tree, t * tree_length);
    r.vec.resize(from.vec.size());
    for (size_t i = 0; i < from.vec.size(); ++i)
        r.vec[i] = from.vec[i] + t * (to.vec[i] - from.vec[i]);
    return r;
}

GeodesicPath product_geodesic(const ProductPoint& p, const ProductPoint& q) {
    if (p.vec.size() != q.vec.size()) throw validation_error("product point dims differ");
    GeodesicPath g;
    g.from = p;
    g.to = q;
    g.tree_length = tree_distance(p.tree, q.tree);
    g.euclid_len2 = 0;
    for (size_t i = 0; i < p.vec.size(); ++i) {
        Rat d = q.vec[i] - p.vec[i];
        g.euclid_len2 += d * d;
    }
    return g;
}

std::string ProductPoint::str() const {
    std::ostringstream os;
    os << "(" << tree.str() << "; ";
    for (size_t i = 0; i < vec.size(); ++i) {
        if (i) os << ",";
        os << rat_to_string(vec[i]);
    }
    os << ")";
    return os.str();
}

std::string tree_point_key(const TreePoint& p) {
    std::string s = p.base().str();
    s.push_back('|');
    s += std::to_string(p.letter());
    s.push_back('|');
    s += rat_to_string(p.offset());
    return s;
}

std::string product_point_key(const ProductPoint& p) {
    std::string s = tree_point_key(p.tree);
    for (const auto& x : p.vec) {
        s.push_back(';');
        s += rat_to_string(x);
    }
    return s;
}

}  // namespace ggt
