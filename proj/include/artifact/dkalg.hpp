// SPDX-License-Identifier: Apache-2.0
// Presented quotients of free algebras: ft_n, t_n, spherical ft_n, fB_n.
#pragma once

#include "artifact/freealg.hpp"

#include <atomic>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace artifact {

enum class Kind { Free, DK, Spherical, FB };

struct PresentationId {
    Kind kind = Kind::DK;
    int n = 1;
    bool framed = true;
    // t(n)/c: additionally quotient unframed DK(n) by the sum of all t_ij.
    bool central_quotient = false;

    static PresentationId ft(int n) { return {Kind::DK, n, true, false}; }
    static PresentationId t(int n) { return {Kind::DK, n, false, false}; }
    static PresentationId sph(int n) { return {Kind::Spherical, n, true, false}; }
    static PresentationId fB(int n) { return {Kind::FB, n, true, false}; }
    static PresentationId free_xy() { return {Kind::Free, 2, false, false}; }

    std::string descriptor() const;
    static PresentationId parse(const std::string& desc);
    // Generators of the free cover, sorted.
    std::vector<GeneratorId> cover_generators() const;

    auto operator<=>(const PresentationId&) const = default;
};

// Homogeneous ideal generators as series over the free cover (truncation 2).
std::vector<Series> relation_set(const PresentationId& p);
// The free algebra on the cover generators, descriptor "cover:<desc>".
std::shared_ptr<const Algebra> cover_algebra(const PresentationId& p);

// Quotient algebra with a degree-by-degree normal-form table. Linear
// relations eliminate generators; then for each degree d the standard words
// S_d and the step map S_{d-1} x (surviving generators) -> span(S_d) are built
// from the quadratic relations.
class Presentation final : public Algebra {
public:
    explicit Presentation(PresentationId id);

    const std::string& descriptor() const override { return desc_; }
    const std::vector<GeneratorId>& generators() const override { return gens_; }
    void reduce_into(const Monomial& m, const Rat& c, Terms& out) const override;
    void require_degree(int d) const override;

    const PresentationId& id() const { return id_; }
    int built_degree() const { return built_.load(std::memory_order_acquire); }
    std::size_t dimension(int d) const;
    const std::vector<Monomial>& standard_words(int d) const;
    // Indices (into generators()) of generators that survive linear elimination.
    const std::vector<int>& survivors() const { return surv_; }

private:
    using Vec = std::vector<std::pair<std::uint32_t, Rat>>;
    struct Level {
        std::vector<Monomial> words;
        std::vector<Vec> step;  // column (s * m + g) -> combination over words
    };

    void build_level(int d);
    void compute_level(int d);
    bool load_level(int d, const std::string& path);
    void store_level(int d, const std::string& path) const;
    Vec reduce_word(const Monomial& m) const;
    Vec reduce_word_uncached(const Monomial& m) const;

    PresentationId id_;
    std::string desc_;
    std::vector<GeneratorId> gens_;
    std::vector<int> surv_;
    std::vector<int> surv_pos_;              // generator index -> survivor position or -1
    std::vector<Vec> linear_;                // generator index -> combination over survivor positions
    std::vector<std::vector<std::pair<std::pair<int, int>, Rat>>> quad_;  // over survivor positions

    mutable std::mutex build_mu_;
    mutable std::atomic<int> built_{0};
    mutable std::vector<std::unique_ptr<Level>> levels_;  // levels_[d], guarded by build_mu_
    mutable std::shared_mutex memo_mu_;
    mutable std::map<Monomial, Vec> memo_;
};

// On-disk normal-form tables, one file per (presentation, degree, monomial
// order version). Unset by default; tables built afterwards read and write it.
void set_table_cache_dir(std::optional<std::string> dir);
std::optional<std::string> table_cache_dir();
std::string table_cache_path(const std::string& dir, const PresentationId& p, int d);

// Shared instance per descriptor ("ft(3)", "t(4)", "sph(2)", "fB(5)", "t(3)/c").
std::shared_ptr<const Presentation> presentation(const PresentationId& p);
// Resolver for series files; includes "free(x,y)" and cover algebras.
std::shared_ptr<const Algebra> resolve_algebra(const std::string& desc);

// Re-reduces a; for a over a cover algebra, moves it into the quotient.
Series normal_form(const Series& a);
Series normal_form(const Series& a, const std::shared_ptr<const Algebra>& target);
long degree_dimension(const PresentationId& p, int d);

// sigma[i-1] is the image of i.
Series permute(const Series& a, const std::vector<int>& sigma);
Series transposition01(const Series& a);
enum class CyclicStrategy { Transposition, Spherical };
// Action of z_{n+1}^k with labels moving by i -> i - 1 mod n + 1 (label 0 is
// the output). This is the direction in which z(x o_i y) = z(x) o_{i-1} y.
Series cyclic_rotate(const Series& a, int k,
                     CyclicStrategy s = CyclicStrategy::Transposition);
Series operad_insert(const Series& x, int k, const Series& y);
Series to_sphere_braid(const Series& a);

// Algebra morphism into target given by an image for each generator id.
Series relabel(const Series& a, const std::shared_ptr<const Algebra>& target,
               const std::function<Series(const GeneratorId&)>& image);

// Strand count of a DK-type algebra (ft, t, fB); throws otherwise.
int arity_of(const Series& a);

}  // namespace artifact
