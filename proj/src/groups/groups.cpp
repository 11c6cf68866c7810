#include "ggt/groups/groups.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>

namespace ggt {

namespace {

long checked_add(long a, long b) {
    long r;
    if (__builtin_add_overflow(a, b, &r)) throw budget_error("int64 overflow in group arithmetic");
    return r;
}

long checked_mul(long a, long b) {
    long r;
    if (__builtin_mul_overflow(a, b, &r)) throw budget_error("int64 overflow in group arithmetic");
    return r;
}

std::vector<long> vec_add(const std::vector<long>& a, const std::vector<long>& b) {
    if (a.size() != b.size()) throw validation_error("vector dimension mismatch");
    std::vector<long> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

std::vector<long> vec_neg(const std::vector<long>& a) {
    std::vector<long> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

bool vec_zero(const std::vector<long>& a) {
    return std::all_of(a.begin(), a.end(), [](long x) { return x == 0; });
}

std::vector<long> mat_apply_i64(const MatZ& m, const std::vector<long>& v) {
    std::vector<long> r(m.rows(), 0);
    for (int i = 0; i < m.rows(); ++i) {
        long acc = 0;
        for (int j = 0; j < m.cols(); ++j) {
            if (!m.at(i, j).fits_slong_p()) throw budget_error("matrix entry exceeds int64");
            acc = checked_add(acc, checked_mul(m.at(i, j).get_si(), v[j]));
        }
        r[i] = acc;
    }
    return r;
}

void append_long(std::string& s, long x) {
    char buf[24];
    std::memcpy(buf, &x, sizeof(long));
    s.append(buf, sizeof(long));
}

std::vector<long> parse_vec(const std::string& text, int want_dim) {
    std::vector<long> v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::string t;
        for (char c : tok)
            if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
        if (t.empty()) throw validation_error("empty vector entry in: " + text);
        v.push_back(std::stol(t));
    }
    if (want_dim >= 0 && static_cast<int>(v.size()) != want_dim)
        throw validation_error("vector has wrong dimension: " + text);
    return v;
}

}  // namespace

std::vector<long> poly_phi_pow(const PolyGroup& g, const std::vector<long>& z, long k) {
    std::vector<long> r = z;
    const MatZ& step = k >= 0 ? g.phi->mat() : g.phi->inv();
    for (long i = 0; i < std::labs(k); ++i) r = mat_apply_i64(step, r);
    return r;
}

Elem identity(const Group& g) {
    return std::visit(
        [](const auto& gr) -> Elem {
            using T = std::decay_t<decltype(gr)>;
            if constexpr (std::is_same_v<T, ZnGroup>) return ZnElem{std::vector<long>(gr.n, 0)};
            else if constexpr (std::is_same_v<T, FreeGroup>) return FreeElem{};
            else if constexpr (std::is_same_v<T, PolyGroup>)
                return PolyElem{std::vector<long>(gr.n, 0), 0};
            else
                return ProdElem{FreeWord{}, std::vector<long>(gr.n, 0)};
        },
        g);
}

Elem mul(const Group& g, const Elem& a, const Elem& b) {
    if (std::holds_alternative<ZnGroup>(g))
        return ZnElem{vec_add(std::get<ZnElem>(a).v, std::get<ZnElem>(b).v)};
    if (std::holds_alternative<FreeGroup>(g))
        return FreeElem{std::get<FreeElem>(a).w * std::get<FreeElem>(b).w};
    if (const auto* pg = std::get_if<PolyGroup>(&g)) {
        const auto& x = std::get<PolyElem>(a);
        const auto& y = std::get<PolyElem>(b);
        return PolyElem{vec_add(x.z, poly_phi_pow(*pg, y.z, x.k)), checked_add(x.k, y.k)};
    }
    const auto& x = std::get<ProdElem>(a);
    const auto& y = std::get<ProdElem>(b);
    return ProdElem{x.w * y.w, vec_add(x.v, y.v)};
}

Elem inv(const Group& g, const Elem& a) {
    if (std::holds_alternative<ZnGroup>(g)) return ZnElem{vec_neg(std::get<ZnElem>(a).v)};
    if (std::holds_alternative<FreeGroup>(g)) return FreeElem{std::get<FreeElem>(a).w.inverse()};
    if (const auto* pg = std::get_if<PolyGroup>(&g)) {
        const auto& x = std::get<PolyElem>(a);
        return PolyElem{vec_neg(poly_phi_pow(*pg, x.z, -x.k)), -x.k};
    }
    const auto& x = std::get<ProdElem>(a);
    return ProdElem{x.w.inverse(), vec_neg(x.v)};
}

bool is_identity(const Elem& a) {
    return std::visit(
        [](const auto& e) {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, ZnElem>) return vec_zero(e.v);
            else if constexpr (std::is_same_v<T, FreeElem>) return e.w.is_identity();
            else if constexpr (std::is_same_v<T, PolyElem>) return e.k == 0 && vec_zero(e.z);
            else
                return e.w.is_identity() && vec_zero(e.v);
        },
        a);
}

namespace {

std::string gen_label(int i, bool positive) {
    std::string s(1, static_cast<char>((positive ? 'a' : 'A') + i));
    return s;
}

}  // namespace

std::vector<Generator> default_generators(const Group& g) {
    std::vector<Generator> gens;
    if (const auto* zg = std::get_if<ZnGroup>(&g)) {
        for (int i = 0; i < zg->n; ++i) {
            std::vector<long> v(zg->n, 0);
            v[i] = 1;
            gens.push_back({ZnElem{v}, "e" + std::to_string(i + 1)});
            v[i] = -1;
            gens.push_back({ZnElem{v}, "E" + std::to_string(i + 1)});
        }
    } else if (const auto* fg = std::get_if<FreeGroup>(&g)) {
        for (int i = 0; i < fg->m; ++i) {
            gens.push_back({FreeElem{FreeWord::from_letters({i + 1})}, gen_label(i, true)});
            gens.push_back({FreeElem{FreeWord::from_letters({-(i + 1)})}, gen_label(i, false)});
        }
    } else if (const auto* pg = std::get_if<PolyGroup>(&g)) {
        for (int i = 0; i < pg->n; ++i) {
            std::vector<long> v(pg->n, 0);
            v[i] = 1;
            gens.push_back({PolyElem{v, 0}, "e" + std::to_string(i + 1)});
            v[i] = -1;
            gens.push_back({PolyElem{v, 0}, "E" + std::to_string(i + 1)});
        }
        gens.push_back({PolyElem{std::vector<long>(pg->n, 0), 1}, "t"});
        gens.push_back({PolyElem{std::vector<long>(pg->n, 0), -1}, "T"});
    } else {
        const auto& prg = std::get<ProdGroup>(g);
        for (int i = 0; i < prg.m; ++i) {
            gens.push_back({ProdElem{FreeWord::from_letters({i + 1}), std::vector<long>(prg.n, 0)},
                            gen_label(i, true)});
            gens.push_back({ProdElem{FreeWord::from_letters({-(i + 1)}), std::vector<long>(prg.n, 0)},
                            gen_label(i, false)});
        }
        for (int i = 0; i < prg.n; ++i) {
            std::vector<long> v(prg.n, 0);
            v[i] = 1;
            gens.push_back({ProdElem{FreeWord{}, v}, "e" + std::to_string(i + 1)});
            v[i] = -1;
            gens.push_back({ProdElem{FreeWord{}, v}, "E" + std::to_string(i + 1)});
        }
    }
    return gens;
}

std::string elem_key(const Elem& a) {
    std::string s;
    if (const auto* z = std::get_if<ZnElem>(&a)) {
        s.push_back('Z');
        for (long x : z->v) append_long(s, x);
    } else if (const auto* f = std::get_if<FreeElem>(&a)) {
        s.push_back('F');
        for (int l : f->w.letters()) append_long(s, l);
    } else if (const auto* p = std::get_if<PolyElem>(&a)) {
        s.push_back('P');
        append_long(s, p->k);
        for (long x : p->z) append_long(s, x);
    } else {
        const auto& pr = std::get<ProdElem>(a);
        s.push_back('X');
        append_long(s, static_cast<long>(pr.w.length()));
        for (int l : pr.w.letters()) append_long(s, l);
        for (long x : pr.v) append_long(s, x);
    }
    return s;
}

namespace {

std::string vec_str(const std::vector<long>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

std::string elem_str(const Elem& a) {
    if (const auto* z = std::get_if<ZnElem>(&a)) return vec_str(z->v);
    if (const auto* f = std::get_if<FreeElem>(&a)) return f->w.str();
    if (const auto* p = std::get_if<PolyElem>(&a))
        return "z=(" + vec_str(p->z) + ");k=" + std::to_string(p->k);
    const auto& pr = std::get<ProdElem>(a);
    return pr.w.str() + ":" + vec_str(pr.v);
}

Group parse_group(const std::string& descriptor) {
    auto first = descriptor.find(':');
    if (first == std::string::npos) throw validation_error("bad group descriptor: " + descriptor);
    std::string kind = descriptor.substr(0, first);
    std::string rest = descriptor.substr(first + 1);
    if (kind == "Zn") return ZnGroup{std::stoi(rest)};
    if (kind == "Fm") return FreeGroup{std::stoi(rest)};
    if (kind == "poly") {
        auto second = rest.find(':');
        if (second == std::string::npos)
            throw validation_error("poly descriptor needs poly:n:<matrix>");
        int n = std::stoi(rest.substr(0, second));
        std::string mat = rest.substr(second + 1);
        if (!mat.empty() && mat.front() == '"' && mat.back() == '"' && mat.size() >= 2)
            mat = mat.substr(1, mat.size() - 2);
        return PolyGroup{n, IntAutomorphism::from_string(mat)};
    }
    if (kind == "FmxZn") {
        auto second = rest.find(':');
        if (second == std::string::npos) throw validation_error("FmxZn descriptor needs FmxZn:m:n");
        return ProdGroup{std::stoi(rest.substr(0, second)), std::stoi(rest.substr(second + 1))};
    }
    throw validation_error("unknown group family: " + kind);
}

std::string group_str(const Group& g) {
    if (const auto* z = std::get_if<ZnGroup>(&g)) return "Zn:" + std::to_string(z->n);
    if (const auto* f = std::get_if<FreeGroup>(&g)) return "Fm:" + std::to_string(f->m);
    if (const auto* p = std::get_if<PolyGroup>(&g))
        return "poly:" + std::to_string(p->n) + ":" + p->phi->mat().to_string();
    const auto& pr = std::get<ProdGroup>(g);
    return "FmxZn:" + std::to_string(pr.m) + ":" + std::to_string(pr.n);
}

Elem parse_elem(const Group& g, const std::string& literal) {
    if (const auto* zg = std::get_if<ZnGroup>(&g)) return ZnElem{parse_vec(literal, zg->n)};
    if (std::holds_alternative<FreeGroup>(g)) return FreeElem{FreeWord::parse(literal)};
    if (const auto* pg = std::get_if<PolyGroup>(&g)) {
        if (literal == "t") return PolyElem{std::vector<long>(pg->n, 0), 1};
        if (literal == "T") return PolyElem{std::vector<long>(pg->n, 0), -1};
        auto zpos = literal.find("z=(");
        if (zpos != std::string::npos) {
            auto close = literal.find(')', zpos);
            auto kpos = literal.find("k=");
            if (close == std::string::npos || kpos == std::string::npos)
                throw validation_error("bad poly element literal: " + literal);
            std::vector<long> z = parse_vec(literal.substr(zpos + 3, close - zpos - 3), pg->n);
            long k = std::stol(literal.substr(kpos + 2));
            return PolyElem{z, k};
        }
        // Bare vector shorthand: "1,2" means (z, 0).
        return PolyElem{parse_vec(literal, pg->n), 0};
    }
    const auto& prg = std::get<ProdGroup>(g);
    auto colon = literal.find(':');
    FreeWord w;
    std::vector<long> v(prg.n, 0);
    if (colon == std::string::npos) {
        w = FreeWord::parse(literal);
    } else {
        if (colon > 0) w = FreeWord::parse(literal.substr(0, colon));
        if (colon + 1 < literal.size()) v = parse_vec(literal.substr(colon + 1), prg.n);
    }
    if (w.max_generator() > prg.m) throw validation_error("word uses generator beyond rank");
    return ProdElem{w, v};
}

std::vector<Elem> parse_elem_list(const Group& g, const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ';')) parts.push_back(tok);
    // Re-join poly literals "z=(..);k=..", which contain a ';' of their own.
    std::vector<std::string> joined;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].find("z=(") != std::string::npos && parts[i].find("k=") == std::string::npos &&
            i + 1 < parts.size()) {
            joined.push_back(parts[i] + ";" + parts[i + 1]);
            ++i;
        } else {
            joined.push_back(parts[i]);
        }
    }
    std::vector<Elem> out;
    for (const auto& p : joined) {
        std::string trimmed;
        for (char c : p)
            if (!std::isspace(static_cast<unsigned char>(c)) || c == ' ') trimmed.push_back(c);
        // keep interior spaces; strip outer ones
        size_t b = trimmed.find_first_not_of(' ');
        size_t e = trimmed.find_last_not_of(' ');
        if (b == std::string::npos) continue;
        out.push_back(parse_elem(g, trimmed.substr(b, e - b + 1)));
    }
    return out;
}

}  // namespace ggt
