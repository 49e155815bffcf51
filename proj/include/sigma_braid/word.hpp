#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sbraid {

// Raised for anything the caller asked that the mathematics refuses.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : DomainError(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class IndexError : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedError : public DomainError {
 public:
  using DomainError::DomainError;
};

enum class Family { Artin, PureA, PureB, PureC, Model, SphereA, Delta };

enum class ModelLetter : int { x, y, a, b, u, v, w, ub, vb, w2, w3 };
inline constexpr int kModelLetterCount = 11;

std::string_view model_letter_name(ModelLetter l);

// A generator without its sign. For Model letters, i holds the ModelLetter value.
struct Gen {
  Family family = Family::PureA;
  int i = 0;
  int j = 0;
  auto operator<=>(const Gen&) const = default;
};

struct Letter {
  Gen gen;
  int sign = 1;
  Letter inverse() const { return {gen, -sign}; }
  auto operator<=>(const Letter&) const = default;
};

Letter sigma(int i, int sign = 1);
Letter a(int i, int sign = 1);
Letter b(int i, int sign = 1);
Letter C(int i, int j, int sign = 1);
Letter At(int i, int j, int sign = 1);
Letter delta(int sign = 1);
Letter m(ModelLetter l, int sign = 1);

// Freely reduced word. Every constructor reduces.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::span<const Letter> letters);
  explicit Word(const std::vector<Letter>& letters) : Word(std::span<const Letter>(letters)) {}

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const Letter& operator[](std::size_t k) const { return letters_[k]; }

  Word inverse() const;
  Word pow(long long e) const;
  Word& operator*=(const Word& rhs);
  Word& operator*=(const Letter& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }
  friend Word operator*(Word lhs, const Letter& rhs) { return lhs *= rhs; }
  friend Word operator*(const Letter& lhs, const Word& rhs) { return Word{lhs} *= rhs; }

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

Word reduce(std::span<const Letter> raw);

// Empty word when i == j (the trivial-braid convention for C_{j,j}).
Word Cw(int i, int j, int sign = 1);

enum class GroupKind { Pure, Full };
enum class Surface { Torus, Klein, Sphere, ProjectivePlane, Disc };
enum class ModelId { G2T, G2K, G3T, G4T };

// n is always the number of strands.
struct GroupSpec {
  GroupKind kind = GroupKind::Pure;
  Surface surface = Surface::Torus;
  int n = 1;
  auto operator<=>(const GroupSpec&) const = default;
};

using Alphabet = std::variant<GroupSpec, ModelId>;

std::string_view to_string(GroupKind k);
std::string_view to_string(Surface s);
std::string_view to_string(ModelId id);
GroupKind parse_group_kind(std::string_view s);
Surface parse_surface(std::string_view s);
ModelId parse_model(std::string_view s);
std::string describe(const GroupSpec& g);

// Throws IndexError / DomainError naming the symbol when it is not part of the alphabet.
void check_letter(const Alphabet& alphabet, const Letter& l);
bool admits(const Alphabet& alphabet, const Gen& g);

std::string to_string(const Letter& l);
std::string serialize_word(const Word& w);
Word parse_word(std::string_view text, const Alphabet& alphabet);
Letter parse_letter(std::string_view token, const Alphabet& alphabet);

enum class Product { Alpha, Beta };
Word build_alpha_beta(Product kind, int j, int i, int n);

Word build_A(int i, int j, int n);
Word build_Delta(int n);

}  // namespace sbraid
