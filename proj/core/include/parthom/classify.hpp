#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "parthom/hadamard.hpp"
#include "parthom/structure.hpp"

namespace parthom {

enum class ComponentKind { Zero, Rank1Only, Hadamard };

struct ComponentWitness {
  ComponentKind kind = ComponentKind::Zero;
  MatrixComponent component;
  CanonicalForm form;
  bool negated = false;  // stored H is the canonical H times -1
  SignMatrix h;          // matrix the representation is for
  Representation rep;
  Coordinatisation phi;
};

struct TractabilityWitness {
  SymMatrix source;
  std::vector<ComponentWitness> components;
};

struct ComponentVerdict {
  std::vector<std::size_t> indices;
  bool tractable = false;
  std::optional<ComponentWitness> witness;
  std::optional<HardEvidence> evidence;
  std::vector<std::string> trail;
};

struct Verdict {
  bool tractable = false;
  std::optional<TractabilityWitness> witness;
  std::optional<HardEvidence> evidence;   // first hard component
  std::vector<ComponentVerdict> components;
};

ComponentVerdict classify_connected(const MatrixComponent& comp);
Verdict classify(const SymMatrix& a);

// Every block has rank one; the criterion for nonnegative matrices.
bool block_rank_criterion(const SymMatrix& a);
bool is_nonnegative(const SymMatrix& a);

std::string verdict_text(const Verdict& v);
std::string verdict_json(const Verdict& v);

}  // namespace parthom
