#pragma once

#include <cstdint>
#include <memory>
#include <string>

namespace ksz {

struct RecipeNode;

// Construction provenance of a sign matrix, shared between registry entries.
using Recipe = std::shared_ptr<const RecipeNode>;

struct RecipeNode {
  enum class Kind { Base1, Base2, PaleyI, SylvesterDouble, Kronecker };

  Kind kind;
  std::int64_t paley_q = 0;  // PaleyI only
  Recipe left;               // SylvesterDouble child, Kronecker left factor
  Recipe right;              // Kronecker right factor
};

Recipe recipe_base1();
Recipe recipe_base2();
Recipe recipe_paley(std::int64_t q);
Recipe recipe_sylvester(Recipe child);
Recipe recipe_kronecker(Recipe left, Recipe right);

// Order of the matrix the recipe realizes.
std::int64_t recipe_order(const Recipe& recipe);

// Compact human-readable rendering, e.g. "kron(sylvester(base2),paley(11))".
std::string recipe_to_string(const Recipe& recipe);

}  // namespace ksz
