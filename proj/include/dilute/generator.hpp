#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace dilute {

/// Generator alphabet of the dilute braid-monoid algebra.
///
///  - Pss, Psv, Pvs, Pvv : pair projectors (string/vacancy at sites j, j+1)
///  - S, V               : single-site string / vacancy projectors
///  - Braid, BraidInv, E : braid, inverse braid, monoid (TL) generator
///  - SlantF             : (string, vacancy) -> (vacancy, string)
///  - SlantB             : (vacancy, string) -> (string, vacancy)
///  - Cap                : (string, string)  -> (vacancy, vacancy)
///  - Cup                : (vacancy, vacancy) -> (string, string)
enum class GeneratorKind {
  Id,
  Pss,
  Psv,
  Pvs,
  Pvv,
  S,
  V,
  Braid,
  BraidInv,
  E,
  SlantF,
  SlantB,
  Cap,
  Cup,
};

inline constexpr std::array<GeneratorKind, 4> kProjectorKinds = {
    GeneratorKind::Pss, GeneratorKind::Psv, GeneratorKind::Pvs, GeneratorKind::Pvv};
inline constexpr std::array<GeneratorKind, 3> kBraidMonoidKinds = {
    GeneratorKind::Braid, GeneratorKind::BraidInv, GeneratorKind::E};
inline constexpr std::array<GeneratorKind, 4> kDiluteKinds = {
    GeneratorKind::SlantF, GeneratorKind::SlantB, GeneratorKind::Cap, GeneratorKind::Cup};
inline constexpr std::array<GeneratorKind, 13> kSitedKinds = {
    GeneratorKind::Pss,   GeneratorKind::Psv,      GeneratorKind::Pvs,    GeneratorKind::Pvv,
    GeneratorKind::S,     GeneratorKind::V,        GeneratorKind::Braid,  GeneratorKind::BraidInv,
    GeneratorKind::E,     GeneratorKind::SlantF,   GeneratorKind::SlantB, GeneratorKind::Cap,
    GeneratorKind::Cup};

constexpr bool is_single_site(GeneratorKind k) {
  return k == GeneratorKind::S || k == GeneratorKind::V;
}
constexpr bool is_pair(GeneratorKind k) { return k != GeneratorKind::Id && !is_single_site(k); }

std::string_view kind_name(GeneratorKind k);
std::optional<GeneratorKind> kind_from_name(std::string_view name);

struct GeneratorSymbol {
  GeneratorKind kind = GeneratorKind::Id;
  int site = 0;  // unused for Id

  friend auto operator<=>(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

/// Site bounds for a chain with pair indices 1..N (sites 1..N+1).
bool in_range(const GeneratorSymbol& g, int N);
/// Throws SymbolOutOfRange when in_range fails.
void require_in_range(const GeneratorSymbol& g, int N);

std::string to_string(const GeneratorSymbol& g);

}  // namespace dilute
