#pragma once

#include <memory>
#include <variant>

#include "ggt/dynamics.hpp"
#include "ggt/groups/words.hpp"

namespace ggt {

// The four normal-form families. Elements carry machine integers with
// overflow guards; arbitrary precision lives in the dynamics layer.

struct ZnGroup {
    int n;
};

struct FreeGroup {
    int m;
};

// Z^n semidirect Z: elements (z, k) with (z1,k1)(z2,k2) = (z1 + phi^k1 z2, k1+k2).
struct PolyGroup {
    int n;
    std::shared_ptr<const IntAutomorphism> phi;  // shared: groups are copied freely

    PolyGroup(int n_, IntAutomorphism phi_)
        : n(n_), phi(std::make_shared<const IntAutomorphism>(std::move(phi_))) {
        if (phi->dim() != n) throw validation_error("poly group dimension mismatch");
    }
};

struct ProdGroup {
    int m;  // free rank
    int n;  // abelian rank
};

using Group = std::variant<ZnGroup, FreeGroup, PolyGroup, ProdGroup>;

struct ZnElem {
    std::vector<long> v;
    bool operator==(const ZnElem&) const = default;
};

struct FreeElem {
    FreeWord w;
    bool operator==(const FreeElem&) const = default;
};

struct PolyElem {
    std::vector<long> z;
    long k = 0;
    bool operator==(const PolyElem&) const = default;
};

struct ProdElem {
    FreeWord w;
    std::vector<long> v;
    bool operator==(const ProdElem&) const = default;
};

using Elem = std::variant<ZnElem, FreeElem, PolyElem, ProdElem>;

Elem identity(const Group& g);
Elem mul(const Group& g, const Elem& a, const Elem& b);
Elem inv(const Group& g, const Elem& a);
bool is_identity(const Elem& a);

// phi^k z with int64 overflow guards.
std::vector<long> poly_phi_pow(const PolyGroup& g, const std::vector<long>& z, long k);

struct Generator {
    Elem g;
    std::string label;
};

// The fixed default symmetric generating sets, in the deterministic order
// the BFS expands them.
std::vector<Generator> default_generators(const Group& g);

// Canonical byte-string key: used for hashing and for deterministic output.
std::string elem_key(const Elem& a);
// Human-readable form per the CLI element grammar.
std::string elem_str(const Elem& a);

// Group descriptors: "Zn:k", "Fm:k", "poly:n:<matrix>", "FmxZn:m:n".
Group parse_group(const std::string& descriptor);
std::string group_str(const Group& g);

// Element literals: free words over a..z/A..Z; vectors as comma lists; poly
// elements "z=(..);k=.."; product elements "word:vec" with either side
// optional.
Elem parse_elem(const Group& g, const std::string& literal);

// Splits a ';'-separated generator list, keeping poly "z=(..);k=.." literals
// intact, and parses each entry.
std::vector<Elem> parse_elem_list(const Group& g, const std::string& text);

}  // namespace ggt
