#include "ksz/recipe.hpp"

#include <stdexcept>

namespace ksz {

namespace {

Recipe make(RecipeNode node) { return std::make_shared<const RecipeNode>(std::move(node)); }

}  // namespace

Recipe recipe_base1() {
  static const Recipe node = make({RecipeNode::Kind::Base1});
  return node;
}

Recipe recipe_base2() {
  static const Recipe node = make({RecipeNode::Kind::Base2});
  return node;
}

Recipe recipe_paley(std::int64_t q) {
  RecipeNode node{RecipeNode::Kind::PaleyI};
  node.paley_q = q;
  return make(std::move(node));
}

Recipe recipe_sylvester(Recipe child) {
  RecipeNode node{RecipeNode::Kind::SylvesterDouble};
  node.left = std::move(child);
  return make(std::move(node));
}

Recipe recipe_kronecker(Recipe left, Recipe right) {
  RecipeNode node{RecipeNode::Kind::Kronecker};
  node.left = std::move(left);
  node.right = std::move(right);
  return make(std::move(node));
}

std::int64_t recipe_order(const Recipe& recipe) {
  if (!recipe) throw std::invalid_argument("recipe_order: empty recipe");
  switch (recipe->kind) {
    case RecipeNode::Kind::Base1:
      return 1;
    case RecipeNode::Kind::Base2:
      return 2;
    case RecipeNode::Kind::PaleyI:
      return recipe->paley_q + 1;
    case RecipeNode::Kind::SylvesterDouble:
      return 2 * recipe_order(recipe->left);
    case RecipeNode::Kind::Kronecker:
      return recipe_order(recipe->left) * recipe_order(recipe->right);
  }
  throw std::logic_error("recipe_order: unknown node kind");
}

std::string recipe_to_string(const Recipe& recipe) {
  if (!recipe) return "(none)";
  switch (recipe->kind) {
    case RecipeNode::Kind::Base1:
      return "base1";
    case RecipeNode::Kind::Base2:
      return "base2";
    case RecipeNode::Kind::PaleyI:
      return "paley(" + std::to_string(recipe->paley_q) + ")";
    case RecipeNode::Kind::SylvesterDouble:
      return "sylvester(" + recipe_to_string(recipe->left) + ")";
    case RecipeNode::Kind::Kronecker:
      return "kron(" + recipe_to_string(recipe->left) + "," + recipe_to_string(recipe->right) + ")";
  }
  return "?";
}

}  // namespace ksz
