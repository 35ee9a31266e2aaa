#include "sfpds/counts.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "sfpds/error.hpp"
#include "sfpds/statevector.hpp"

namespace sfpds {

namespace {

struct Record {
  std::string bits;
  std::string value;
};

// Splits "<bits> <value>" lines, skipping blanks and '#' comments.
template <typename F>
void for_each_record(std::string_view text, F&& f) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    Record r;
    if (!(ls >> r.bits)) continue;
    std::string extra;
    if (!(ls >> r.value) || (ls >> extra)) {
      throw ValidationError("line " + std::to_string(line_no) + ": expected '<bitstring> <value>'");
    }
    try {
      f(r, line_no);
    } catch (const ValidationError& e) {
      const std::string msg = e.what();
      if (msg.rfind("line ", 0) == 0) throw;
      throw ValidationError("line " + std::to_string(line_no) + ": " + msg);
    }
  }
}

void check_width(std::size_t n_bits) {
  if (n_bits == 0 || n_bits > 64) throw ValidationError("bit width must lie in 1..64");
}

}  // namespace

CountTable::CountTable(std::size_t n_bits) : n_bits_(n_bits) { check_width(n_bits); }

void CountTable::add(std::uint64_t outcome, std::uint64_t count) {
  if (n_bits_ < 64 && (outcome >> n_bits_) != 0) {
    throw ValidationError("outcome wider than the histogram");
  }
  if (count == 0) return;
  counts_[outcome] += count;
  shots_ += count;
}

std::uint64_t CountTable::count(std::uint64_t outcome) const {
  const auto it = counts_.find(outcome);
  return it == counts_.end() ? 0 : it->second;
}

std::string CountTable::to_text() const {
  std::string out;
  for (const auto& [k, c] : counts_) {
    out += bits_to_string(k, n_bits_);
    out += ' ';
    out += std::to_string(c);
    out += '\n';
  }
  return out;
}

CountTable CountTable::parse_text(std::string_view text) {
  CountTable t;
  for_each_record(text, [&](const Record& r, std::size_t) {
    if (t.n_bits_ == 0) {
      check_width(r.bits.size());
      t.n_bits_ = r.bits.size();
    } else if (r.bits.size() != t.n_bits_) {
      throw ValidationError("bitstring width differs from the first record");
    }
    std::uint64_t c = 0;
    const auto [ptr, ec] = std::from_chars(r.value.data(), r.value.data() + r.value.size(), c);
    if (ec != std::errc() || ptr != r.value.data() + r.value.size()) {
      throw ValidationError("count is not a non-negative integer: '" + r.value + "'");
    }
    t.add(bits_from_string(r.bits), c);
  });
  if (t.n_bits_ == 0) throw ValidationError("histogram has no records");
  return t;
}

double ProbabilityTable::total() const {
  double s = 0.0;
  for (const auto& [k, p] : probabilities) s += p;
  return s;
}

double ProbabilityTable::probability(std::uint64_t outcome) const {
  const auto it = probabilities.find(outcome);
  return it == probabilities.end() ? 0.0 : it->second;
}

ProbabilityTable ProbabilityTable::from_counts(const CountTable& counts) {
  if (counts.shots() == 0) throw ValidationError("histogram is empty");
  ProbabilityTable t;
  t.n_bits = counts.n_bits();
  const double inv = 1.0 / static_cast<double>(counts.shots());
  for (const auto& [k, c] : counts.counts()) t.probabilities[k] = static_cast<double>(c) * inv;
  return t;
}

ProbabilityTable ProbabilityTable::marginal(std::size_t offset, std::size_t width) const {
  if (width == 0 || offset + width > n_bits) throw ValidationError("marginal range out of bounds");
  const std::uint64_t mask = width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  ProbabilityTable m;
  m.n_bits = width;
  for (const auto& [k, p] : probabilities) m.probabilities[(k >> offset) & mask] += p;
  return m;
}

std::string ProbabilityTable::to_text() const {
  std::string out;
  char buf[64];
  for (const auto& [k, p] : probabilities) {
    std::snprintf(buf, sizeof buf, " %.17g\n", p);
    out += bits_to_string(k, n_bits);
    out += buf;
  }
  return out;
}

ProbabilityTable ProbabilityTable::parse_text(std::string_view text) {
  ProbabilityTable t;
  for_each_record(text, [&](const Record& r, std::size_t) {
    if (t.n_bits == 0) {
      check_width(r.bits.size());
      t.n_bits = r.bits.size();
    } else if (r.bits.size() != t.n_bits) {
      throw ValidationError("bitstring width differs from the first record");
    }
    double p = 0.0;
    const auto [ptr, ec] = std::from_chars(r.value.data(), r.value.data() + r.value.size(), p);
    if (ec != std::errc() || ptr != r.value.data() + r.value.size() || !std::isfinite(p) || p < 0.0) {
      throw ValidationError("probability is not a finite non-negative number: '" + r.value + "'");
    }
    t.probabilities[bits_from_string(r.bits)] += p;
  });
  if (t.n_bits == 0) throw ValidationError("distribution has no records");
  return t;
}

}  // namespace sfpds
