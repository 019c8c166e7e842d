#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tourvote/core.hpp"

namespace tourvote {

/// Candidate names for vertices 0..n-1. The default table names each vertex
/// by its decimal index.
class LabelTable {
 public:
  static LabelTable integers(std::size_t n);
  /// Names must be unique, nonempty, free of whitespace and not start with '#'.
  explicit LabelTable(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Vertex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  bool is_default() const;
  /// Throws ParseError for an unknown name.
  Vertex lookup(std::string_view name) const;

  bool operator==(const LabelTable& o) const { return names_ == o.names_; }

 private:
  LabelTable() = default;
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
};

/// ".tour" text:
///
///   # labels: a b c        (optional; otherwise vertices are 0..n-1)
///   3
///   010
///   001
///   100
///
/// Line 1 of the payload is n, then n rows of n '0'/'1' characters with row i
/// column j set iff i -> j. '#' starts a comment that runs to end of line;
/// blank lines are ignored. The one recognized comment is a "labels:" line
/// placed before n.
struct TournamentFile {
  Tournament tournament;
  LabelTable labels;
};

TournamentFile parse_tournament(std::string_view text);
TournamentFile read_tournament(std::istream& in);
/// Canonical text; the labels line is written only for non-default tables.
std::string format_tournament(const Tournament& t, const LabelTable& labels);
std::string format_tournament(const Tournament& t);

/// ".votes" text: one voter per line, names separated by spaces, most
/// preferred first. '#' comments and blank lines are ignored.
Profile parse_votes(std::string_view text, const LabelTable& labels);
Profile read_votes(std::istream& in, const LabelTable& labels);
std::string format_votes(const Profile& p, const LabelTable& labels);
std::string format_votes(const Profile& p);

std::string read_file(const std::string& path);
/// Throws std::runtime_error if the file cannot be written.
void write_file(const std::string& path, std::string_view contents);

}  // namespace tourvote
