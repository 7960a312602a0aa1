// Finite sphere models: worlds, valuation, one nested chain of spheres per
// world, and a centering tag.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cpcf/world_set.h"

namespace cpcf {

enum class Centering { Centered, Weak };

using Chain = std::vector<WorldSet>;

// Sorts spheres by size and drops exact duplicates. Incomparable spheres
// are kept so that validation can report them.
Chain normalize_chain(Chain chain);

class SphereModel {
 public:
  SphereModel(std::vector<std::string> world_names, std::map<std::string, WorldSet> valuation,
              std::vector<Chain> systems, Centering centering);

  std::size_t num_worlds() const { return frame_->names.size(); }
  WorldSet worlds() const { return WorldSet::first_n(num_worlds()); }
  const std::vector<std::string>& world_names() const { return frame_->names; }
  const std::string& world_name(WorldId w) const { return frame_->names.at(w); }
  std::optional<WorldId> find_world(std::string_view name) const;
  WorldId world(std::string_view name) const;  // throws std::out_of_range

  const std::map<std::string, WorldSet>& valuation() const { return frame_->valuation; }
  WorldSet valuation(const std::string& atom) const;

  const Chain& spheres(WorldId x) const { return (*systems_).at(x); }
  const std::vector<Chain>& systems() const { return *systems_; }
  // Union of the chain at x (its outermost sphere after normalization).
  WorldSet reach(WorldId x) const;
  // Index of the innermost sphere of S(x) containing y, or the chain length.
  std::size_t rank(WorldId x, WorldId y) const;

  Centering centering() const { return centering_; }
  // Identifies this particular value; every derived model gets a fresh id.
  std::uint64_t generation() const { return generation_; }

  SphereModel with_spheres(WorldId x, Chain chain) const;
  SphereModel with_systems(std::vector<Chain> systems) const;
  SphereModel with_centering(Centering c) const;

 private:
  struct Frame {
    std::vector<std::string> names;
    std::map<std::string, WorldSet> valuation;
  };

  SphereModel(std::shared_ptr<const Frame> frame, std::shared_ptr<const std::vector<Chain>> systems, Centering c);

  std::shared_ptr<const Frame> frame_;
  std::shared_ptr<const std::vector<Chain>> systems_;
  Centering centering_;
  std::uint64_t generation_;
};

struct Violation {
  enum class Kind { NonEmptiness, Nesting, Centering, UnknownWorld, NoSpheres };
  Kind kind;
  WorldId world;
  std::string message;
};

const char* to_string(Violation::Kind k);
const char* to_string(Centering c);

std::vector<Violation> validate(const SphereModel& m);

class ModelError : public std::runtime_error {
 public:
  ModelError(std::string message, std::vector<Violation> violations = {})
      : std::runtime_error(std::move(message)), violations_(std::move(violations)) {}
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Parses the line-oriented model format and validates the result.
SphereModel load_model(std::string_view source);
SphereModel load_model_file(const std::string& path);
std::string save_model(const SphereModel& m);

std::string format_set(const SphereModel& m, WorldSet s);
std::string format_chain(const SphereModel& m, const Chain& chain);

}  // namespace cpcf
