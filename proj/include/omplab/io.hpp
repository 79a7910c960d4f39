#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "omplab/errors.hpp"
#include "omplab/iop_table.hpp"
#include "omplab/poset.hpp"

namespace omplab {

namespace detail {

struct TextLine {
  std::size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<TextLine> tokenize_lines(std::string_view text) {
  std::vector<TextLine> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    TextLine line{number, {}};
    for (std::string tok; ls >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

// Resolves element names once the carrier is declared.
class Carrier {
public:
  void declare(const TextLine& l) {
    if (n_) fail(l, "duplicate 'elements'");
    if (l.tokens.size() != 2) fail(l, "expected 'elements <n>'");
    std::size_t n = 0;
    try {
      n = std::stoul(l.tokens[1]);
    } catch (...) {
      fail(l, "element count is not a number");
    }
    if (n == 0 || n > kMaxElements) fail(l, "element count must be in [1, 64]");
    n_ = n;
    set_names(default_names(n), l);
  }

  void rename(const TextLine& l) {
    require(l);
    if (used_) fail(l, "'names' must precede any reference to elements");
    std::vector<std::string> names(l.tokens.begin() + 1, l.tokens.end());
    if (names.size() != n_) fail(l, "expected " + std::to_string(n_) + " names, got " + std::to_string(names.size()));
    set_names(std::move(names), l);
  }

  ElementId resolve(const TextLine& l, const std::string& name) {
    require(l);
    used_ = true;
    auto it = index_.find(name);
    if (it == index_.end()) fail(l, "unknown element '" + name + "'");
    return it->second;
  }

  void require(const TextLine& l) const {
    if (!n_) fail(l, "'elements <n>' must come first");
  }

  std::size_t size() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }

  [[noreturn]] static void fail(const TextLine& l, const std::string& what) {
    throw ParseError("line " + std::to_string(l.number) + ": " + what, l.number, 0);
  }

private:
  void set_names(std::vector<std::string> names, const TextLine& l) {
    index_.clear();
    for (ElementId i = 0; i < names.size(); ++i)
      if (!index_.emplace(names[i], i).second) fail(l, "duplicate element name '" + names[i] + "'");
    names_ = std::move(names);
  }

  std::size_t n_ = 0;
  bool used_ = false;
  std::vector<std::string> names_;
  std::map<std::string, ElementId> index_;
};

} // namespace detail

/// Reads the `.omp` format:
///
///     elements <n>
///     names <name_0> ... <name_{n-1}>     # optional, default e0..e{n-1}
///     zero <name>   one <name>
///     cover <a> <b>                        # a < b, repeated
///     invol <a> <b>                        # unordered pair, repeated
///
/// The order is the transitive closure of the covers. Construction
/// invariants are verified; the first violation is reported by name.
inline OrthoPoset read_omp(std::string_view text) {
  detail::Carrier carrier;
  std::optional<ElementId> zero, one;
  std::vector<std::pair<ElementId, ElementId>> covers;
  std::map<ElementId, ElementId> invol;

  for (const auto& l : detail::tokenize_lines(text)) {
    const std::string& kw = l.tokens[0];
    if (kw == "elements") {
      carrier.declare(l);
    } else if (kw == "names") {
      carrier.rename(l);
    } else if (kw == "zero" || kw == "one") {
      if (l.tokens.size() % 2 != 0) detail::Carrier::fail(l, "expected 'zero <name>' and/or 'one <name>'");
      for (std::size_t i = 0; i < l.tokens.size(); i += 2) {
        const std::string& key = l.tokens[i];
        if (key != "zero" && key != "one") detail::Carrier::fail(l, "unexpected '" + key + "'");
        auto& slot = key == "zero" ? zero : one;
        if (slot) detail::Carrier::fail(l, "duplicate '" + key + "'");
        slot = carrier.resolve(l, l.tokens[i + 1]);
      }
    } else if (kw == "cover") {
      if (l.tokens.size() != 3) detail::Carrier::fail(l, "expected 'cover <a> <b>'");
      covers.emplace_back(carrier.resolve(l, l.tokens[1]), carrier.resolve(l, l.tokens[2]));
    } else if (kw == "invol") {
      if (l.tokens.size() != 3) detail::Carrier::fail(l, "expected 'invol <a> <b>'");
      const ElementId a = carrier.resolve(l, l.tokens[1]);
      const ElementId b = carrier.resolve(l, l.tokens[2]);
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        auto [it, inserted] = invol.emplace(x, y);
        if (!inserted && it->second != y)
          detail::Carrier::fail(l, "element '" + carrier.names()[x] + "' already has a complement");
      }
    } else {
      detail::Carrier::fail(l, "unknown keyword '" + kw + "'");
    }
  }
  if (!carrier.size()) throw ParseError("missing 'elements <n>'", 0, 0);
  if (!zero || !one) throw ParseError("missing 'zero' or 'one'", 0, 0);
  std::vector<ElementId> inv(carrier.size());
  for (ElementId x = 0; x < carrier.size(); ++x) {
    auto it = invol.find(x);
    if (it == invol.end()) throw StructureError("no complement given for '" + carrier.names()[x] + "'");
    inv[x] = it->second;
  }
  return OrthoPoset(BoundedPoset::from_covers(carrier.size(), covers, *zero, *one, carrier.names()), std::move(inv));
}

inline std::string write_omp(const OrthoPoset& p) {
  std::ostringstream out;
  out << "elements " << p.size() << "\n";
  out << "names";
  for (const auto& n : p.names()) out << ' ' << n;
  out << "\nzero " << p.name(p.zero()) << " one " << p.name(p.one()) << "\n";
  for (auto [a, b] : p.covers()) out << "cover " << p.name(a) << ' ' << p.name(b) << "\n";
  for (ElementId x = 0; x < p.size(); ++x)
    if (x <= p.invol(x)) out << "invol " << p.name(x) << ' ' << p.name(p.invol(x)) << "\n";
  return out.str();
}

/// Reads the `.iop` format: `elements <n>`, optional `names ...`,
/// `zero <name>`, then exactly one `arrow <x> <y> : <name>+` line per pair.
inline IopTable read_iop(std::string_view text) {
  detail::Carrier carrier;
  std::optional<ElementId> zero;
  std::vector<ElementSet> entries;
  std::vector<bool> seen;

  for (const auto& l : detail::tokenize_lines(text)) {
    const std::string& kw = l.tokens[0];
    if (kw == "elements") {
      carrier.declare(l);
      entries.assign(carrier.size() * carrier.size(), ElementSet{});
      seen.assign(entries.size(), false);
    } else if (kw == "names") {
      carrier.rename(l);
    } else if (kw == "zero") {
      if (l.tokens.size() != 2) detail::Carrier::fail(l, "expected 'zero <name>'");
      if (zero) detail::Carrier::fail(l, "duplicate 'zero'");
      zero = carrier.resolve(l, l.tokens[1]);
    } else if (kw == "arrow") {
      if (l.tokens.size() < 5 || l.tokens[3] != ":") detail::Carrier::fail(l, "expected 'arrow <x> <y> : <name>+'");
      const ElementId x = carrier.resolve(l, l.tokens[1]);
      const ElementId y = carrier.resolve(l, l.tokens[2]);
      const std::size_t idx = x * carrier.size() + y;
      if (seen[idx]) detail::Carrier::fail(l, "duplicate arrow " + l.tokens[1] + " " + l.tokens[2]);
      seen[idx] = true;
      for (std::size_t i = 4; i < l.tokens.size(); ++i) entries[idx].insert(carrier.resolve(l, l.tokens[i]));
    } else {
      detail::Carrier::fail(l, "unknown keyword '" + kw + "'");
    }
  }
  if (!carrier.size()) throw ParseError("missing 'elements <n>'", 0, 0);
  if (!zero) throw ParseError("missing 'zero'", 0, 0);
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      throw StructureError("missing arrow " + carrier.names()[i / carrier.size()] + " " +
                           carrier.names()[i % carrier.size()]);
  return IopTable(carrier.size(), *zero, std::move(entries), carrier.names());
}

inline std::string write_iop(const IopTable& t) {
  std::ostringstream out;
  out << "elements " << t.size() << "\nnames";
  for (const auto& n : t.names()) out << ' ' << n;
  out << "\nzero " << t.name(t.zero()) << "\n";
  for (ElementId x = 0; x < t.size(); ++x)
    for (ElementId y = 0; y < t.size(); ++y) {
      out << "arrow " << t.name(x) << ' ' << t.name(y) << " :";
      for (ElementId m : t.arrow(x, y)) out << ' ' << t.name(m);
      out << "\n";
    }
  return out.str();
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

using Model = std::variant<OrthoPoset, IopTable>;

/// Loads `.omp` or `.iop` by extension; other extensions are sniffed for
/// `arrow` lines.
inline Model load_model(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  const std::string ext = path.extension().string();
  bool is_iop = ext == ".iop";
  if (ext != ".iop" && ext != ".omp") {
    for (const auto& l : detail::tokenize_lines(text))
      if (l.tokens[0] == "arrow") is_iop = true;
  }
  try {
    if (is_iop) return read_iop(text);
    return read_omp(text);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line(), e.offset());
  } catch (const StructureError& e) {
    throw StructureError(path.string() + ": " + e.what());
  }
}

} // namespace omplab
