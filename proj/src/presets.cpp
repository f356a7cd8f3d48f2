#include "nichols/presets.hpp"

#include <array>

namespace nichols {

namespace {

struct PresetTable {
  const char* name;
  const char* letter;
  std::array<int, 3> degree;
  std::array<int, 3> minus;     // acts by -1 on both vectors
  std::array<int, 3> diagonal;  // acts by diag(1, -1)
  std::array<int, 3> swap;      // exchanges the two vectors
};

constexpr PresetTable kPresets[] = {
    {"W1", "X", {1, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
    {"W2", "Y", {0, 1, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0}},
    {"W3", "Z", {0, 0, 1}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}},
    {"W4", "R", {1, 1, 0}, {1, 1, 0}, {1, 0, 0}, {0, 0, 1}},
    {"W5", "S", {1, 0, 1}, {1, 0, 1}, {1, 0, 0}, {0, 1, 0}},
    {"W6", "T", {0, 1, 1}, {0, 1, 1}, {0, 1, 0}, {1, 0, 0}},
    {"V1", "X", {1, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
    {"V2", "Y", {0, 1, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0}},
    {"V3", "Z", {0, 0, 1}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}},
};

const PresetTable* find(std::string_view name) {
  for (const auto& p : kPresets)
    if (name == p.name) return &p;
  return nullptr;
}

GroupElement element(const Group& g, const std::array<int, 3>& e) { return g.from_exponents({e[0], e[1], e[2]}); }

}  // namespace

bool is_preset_name(std::string_view name) { return find(name) != nullptr; }

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& p : kPresets) out.emplace_back(p.name);
  return out;
}

YDModule preset_module(std::string_view name, const CocyclePtr& phi) {
  const PresetTable* p = find(name);
  if (!p) throw std::invalid_argument("unknown preset module " + std::string(name));
  const Group& g = phi->group();
  if (g.factor_orders().size() != 3)
    throw ValidationError("preset " + std::string(name) + " needs a group with 3 abelian factors");
  const GroupElement deg = element(g, p->degree);
  const Matrix minus = Matrix::from_rows({{-1, 0}, {0, -1}}, 2);
  const Matrix diagonal = Matrix::from_rows({{1, 0}, {0, -1}}, 2);
  const Matrix swap = Matrix::from_rows({{0, 1}, {1, 0}}, 2);
  const std::string letter = p->letter;
  return YDModule::from_generators(phi, {deg, deg},
                                   {{element(g, p->minus), minus},
                                    {element(g, p->diagonal), diagonal},
                                    {element(g, p->swap), swap}},
                                   {letter + "1", letter + "2"}, std::string(name));
}

}  // namespace nichols
