#include "dilute/generator.hpp"

#include "dilute/error.hpp"

namespace dilute {

namespace {

struct KindName {
  GeneratorKind kind;
  std::string_view name;
};

constexpr KindName kNames[] = {
    {GeneratorKind::Id, "Id"},         {GeneratorKind::Pss, "Pss"},
    {GeneratorKind::Psv, "Psv"},       {GeneratorKind::Pvs, "Pvs"},
    {GeneratorKind::Pvv, "Pvv"},       {GeneratorKind::S, "S"},
    {GeneratorKind::V, "V"},           {GeneratorKind::Braid, "Braid"},
    {GeneratorKind::BraidInv, "BraidInv"}, {GeneratorKind::E, "E"},
    {GeneratorKind::SlantF, "SlantF"}, {GeneratorKind::SlantB, "SlantB"},
    {GeneratorKind::Cap, "Cap"},       {GeneratorKind::Cup, "Cup"},
};

}  // namespace

std::string_view kind_name(GeneratorKind k) {
  for (const auto& kn : kNames)
    if (kn.kind == k) return kn.name;
  return "?";
}

std::optional<GeneratorKind> kind_from_name(std::string_view name) {
  for (const auto& kn : kNames)
    if (kn.name == name) return kn.kind;
  return std::nullopt;
}

bool in_range(const GeneratorSymbol& g, int N) {
  if (g.kind == GeneratorKind::Id) return true;
  const int hi = is_single_site(g.kind) ? N + 1 : N;
  return g.site >= 1 && g.site <= hi;
}

void require_in_range(const GeneratorSymbol& g, int N) {
  if (!in_range(g, N))
    throw Error(ErrorKind::SymbolOutOfRange,
                to_string(g) + " outside chain with N = " + std::to_string(N));
}

std::string to_string(const GeneratorSymbol& g) {
  if (g.kind == GeneratorKind::Id) return "I";
  return std::string(kind_name(g.kind)) + std::to_string(g.site);
}

}  // namespace dilute
