// SPDX-License-Identifier: Apache-2.0
// Chord-diagram category with self-dual objects: layered composites of cups,
// caps, permutations and width slices, and a rewrite-based normal form.
#pragma once

#include "artifact/parcd.hpp"

namespace artifact {

// Parenthesized word in '+'; shape text like "((+ +) +)", "" for the empty word.
struct CObject {
    int width = 0;
    std::string shape;

    static CObject plus(int w);  // left-nested shape
    static CObject parse(const std::string& s);
    std::string str() const { return shape.empty() ? "empty" : shape; }
    bool operator==(const CObject& o) const = default;
};

struct Layer {
    enum class Kind { Cup, Cap, Perm, Slice, Assoc };
    Kind kind = Kind::Slice;
    // Cup(p): new adjacent strands at p, p+1. Cap(p): joins p and p+1.
    // Assoc: three-strand associativity slice Phi(t12, t23) starting at p.
    int pos = 0;
    std::vector<int> perm;         // strand at i moves to perm[i-1]
    std::optional<Series> value;   // Slice: over ft(w), the full current width
    std::optional<Series> phi;     // Assoc: over free(x,y)

    static Layer cup(int p);
    static Layer cap(int p);
    static Layer permutation(std::vector<int> sigma);
    static Layer slice(Series u);
    static Layer assoc(int p, Series phi);

    bool operator==(const Layer& o) const = default;
    std::string str() const;
};

struct CompositeWord {
    Rat coefficient = 1;
    std::vector<Layer> layers;  // bottom to top

    bool operator==(const CompositeWord& o) const = default;
};

struct ChordMorphism {
    CObject source;
    CObject target;
    std::vector<CompositeWord> words;  // formal linear combination
    bool partial = false;              // residue beyond the width bound
    std::string note;

    bool is_zero() const { return words.empty(); }
    std::string str() const;
};

struct ChordConfig {
    int chord_degree = 2;
    int width_bound = 5;
};

// Width after each layer; throws when positions or slice algebras do not chase.
int chase_width(int source_width, const std::vector<Layer>& layers);

ChordMorphism morphism_of(const CObject& s, std::vector<Layer> layers, const Rat& c = 1);
ChordMorphism identity(const CObject& s);
// f after g; requires target(g) = source(f).
ChordMorphism compose(const ChordMorphism& f, const ChordMorphism& g);
ChordMorphism tensor(const ChordMorphism& f, const ChordMorphism& g);
ChordMorphism operator+(const ChordMorphism& a, const ChordMorphism& b);
ChordMorphism operator*(const Rat& c, const ChordMorphism& a);

// seed = 0 applies the first applicable rule each step; other seeds pick
// applicable rewrites at random, for confluence testing.
ChordMorphism normalize(const ChordMorphism& m, const ChordConfig& cfg = {},
                        std::uint64_t seed = 0);
ChordMorphism transpose(const ChordMorphism& f, const ChordConfig& cfg = {});

// Slice u on strands a+1..a+k of width w (u over ft(k)).
Series embed_slice(const Series& u, int offset, int width);
// One-strand projection of a width-3 snake: t_ij -> e_i e_j t11, e = (+, -, +).
Series snake_projection(const Series& u);

// Value of a normalized morphism that is a single slice (or identity) on +.
// Throws otherwise.
Series one_strand_value(const ChordMorphism& m, int C);

Series nu_of(const Series& phi, const ChordConfig& cfg = {});
Series rho_of(const Series& phi, const ChordConfig& cfg = {});

enum class ActVariant { Gprime, Rho };
ChordMorphism grt_act(const GrtElement& g, const ChordMorphism& m, ActVariant v,
                      const ChordConfig& cfg = {});

// omega^{-1} = normal form of Cup(2) Assoc(1) Cap(1) on one strand.
Series omega_inverse(const AssociatorCandidate& a, const ChordConfig& cfg = {});
EquationReport unknot_chain_verify(const GrtElement& g, const AssociatorCandidate& a,
                                   ActVariant v, const ChordConfig& cfg = {});
// Zig-zags, invariance patterns around X, H, I, A, and the 4T slice.
EquationReport relation_checks(const AssociatorCandidate& a, const ChordConfig& cfg = {});

std::string write_chord_morphism(const ChordMorphism& m);
ChordMorphism read_chord_morphism(const std::string& text);

}  // namespace artifact
