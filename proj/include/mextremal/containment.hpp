#pragma once

#include "mextremal/graph.hpp"

#include <optional>
#include <vector>

namespace mextremal {

/// Injective map pattern vertex -> host vertex preserving every colored edge.
struct Embedding
{
    std::vector<int> map;
    auto operator==(const Embedding &) const -> bool = default;
};

/// Map pattern vertex -> target vertex preserving every colored edge; adjacent
/// pattern vertices land on distinct targets, so each preimage is independent.
struct HomWitness
{
    std::vector<int> map;
    auto operator==(const HomWitness &) const -> bool = default;
};

/// Finds a colored copy of pattern in host. Pattern vertices are placed in
/// descending total degree order (ties by index), candidates filtered by
/// per-color degree; isolated pattern vertices still consume host vertices.
auto contains_colored(const ColoredMultigraph & host, const ColoredMultigraph & pattern) -> std::optional<Embedding>;

/// Finds a colored homomorphism from pattern into target.
auto hom_exists(const ColoredMultigraph & pattern, const ColoredMultigraph & target) -> std::optional<HomWitness>;

auto is_valid_embedding(const ColoredMultigraph & host, const ColoredMultigraph & pattern, const Embedding & e) -> bool;
auto is_valid_hom(const ColoredMultigraph & pattern, const ColoredMultigraph & target, const HomWitness & h) -> bool;

}
