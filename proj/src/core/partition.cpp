#include "core/partition.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

#include "core/errors.hpp"

namespace skewtab {

namespace {

constexpr unsigned long kMaxExpandedParts = 100000;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

unsigned long parse_number(std::string_view tok) {
  unsigned long v{};
  const char* end = tok.data() + tok.size();
  auto [p, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || p != end)
    throw ParseError("not an integer: '" + std::string(tok) + "'");
  return v;
}

// Splits on ',' and expands "v^e" tokens into e copies of v.
std::vector<unsigned> expand_tokens(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty partition text");
  std::vector<unsigned> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    std::string_view tok =
        trim(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
    if (tok.empty()) throw ParseError("empty token in '" + std::string(text) + "'");
    unsigned long value;
    unsigned long count = 1;
    if (const std::size_t caret = tok.find('^'); caret != std::string_view::npos) {
      value = parse_number(trim(tok.substr(0, caret)));
      count = parse_number(trim(tok.substr(caret + 1)));
    } else {
      value = parse_number(tok);
    }
    if (value == 0) throw ParseError("parts must be positive");
    if (value > std::numeric_limits<unsigned>::max())
      throw ParseError("part too large: " + std::to_string(value));
    if (out.size() + count > kMaxExpandedParts)
      throw ParseError("partition text expands to too many parts");
    out.insert(out.end(), count, static_cast<unsigned>(value));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw ParseError("partition text has no parts");
  return out;
}

}  // namespace

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("partition parts must be non-increasing");
    n_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  auto parts = expand_tokens(text);
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1])
      throw ParseError("parts must be non-increasing: '" + std::string(text) + "'");
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<unsigned> conj;
  conj.reserve(first_part());
  for (unsigned j = 1; j <= first_part(); ++j) {
    unsigned count = 0;
    for (unsigned p : parts_)
      if (p >= j) ++count;
    conj.push_back(count);
  }
  return Partition(std::move(conj));
}

unsigned Partition::multiplicity(unsigned value) const {
  return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), value));
}

Int Partition::z_factor() const {
  Int z = 1;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    const unsigned long mult = j - i;
    Int power;
    mpz_ui_pow_ui(power.get_mpz_t(), parts_[i], mult);
    z *= power * factorial(mult);
    i = j;
  }
  return z;
}

std::vector<long> Partition::contents() const {
  std::vector<long> cs;
  cs.reserve(n_);
  for (std::size_t i = 1; i <= parts_.size(); ++i)
    for (unsigned j = 1; j <= parts_[i - 1]; ++j)
      cs.push_back(static_cast<long>(j) - static_cast<long>(i));
  return cs;
}

bool Partition::contains(const Partition& inner) const {
  if (inner.height() > height()) return false;
  for (unsigned i = 0; i < inner.height(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::vector<unsigned> parse_weight(std::string_view text) { return expand_tokens(text); }

namespace {

void gen_rec(unsigned long remaining, unsigned max_part, std::vector<unsigned>& acc,
             std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  const unsigned top = static_cast<unsigned>(
      std::min<unsigned long>(remaining, max_part));
  for (unsigned p = top; p >= 1; --p) {
    acc.push_back(p);
    gen_rec(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> generate_partitions(unsigned long n) {
  if (n == 0) throw DomainError("generate_partitions: n must be positive");
  if (n > kMaxExpandedParts) throw DomainError("generate_partitions: n too large");
  std::vector<Partition> out;
  std::vector<unsigned> acc;
  gen_rec(n, static_cast<unsigned>(n), acc, out);
  return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw DomainError("skew shape: inner shape " + inner_.to_string() +
                      " not contained in " + outer_.to_string());
}

CycleType::CycleType(Partition parts_in, unsigned long degree_in)
    : parts(std::move(parts_in)), degree(degree_in) {
  if (parts.n() > degree)
    throw DomainError("cycle type " + parts.to_string() + " does not fit in S_" +
                      std::to_string(degree));
}

}  // namespace skewtab
