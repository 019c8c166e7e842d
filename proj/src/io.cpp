#include "tourvote/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <sstream>

namespace tourvote {

namespace {

constexpr std::string_view kLabelsKey = "labels:";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

struct Line {
  std::size_t number;
  std::string_view content;  // comment stripped and trimmed
  std::string_view comment;  // text after '#', trimmed
};

std::vector<Line> lines_of(std::string_view text) {
  std::vector<Line> out;
  std::size_t start = 0;
  for (std::size_t number = 1; start < text.size(); ++number) {
    const auto nl = text.find('\n', start);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    std::string_view comment;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      comment = trim(raw.substr(hash + 1));
      raw = raw.substr(0, hash);
    }
    out.push_back({number, trim(raw), comment});
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

// ---------------------------------------------------------------- LabelTable

LabelTable LabelTable::integers(std::size_t n) {
  LabelTable t;
  t.names_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.names_.push_back(std::to_string(i));
    t.index_.emplace(t.names_.back(), static_cast<Vertex>(i));
  }
  return t;
}

LabelTable::LabelTable(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& s = names_[i];
    if (s.empty() || s.front() == '#' ||
        s.find_first_of(" \t\r\n") != std::string::npos) {
      throw ParseError("invalid label '" + s + "'");
    }
    if (!index_.emplace(s, static_cast<Vertex>(i)).second) {
      throw ParseError("duplicate label '" + s + "'");
    }
  }
}

bool LabelTable::is_default() const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] != std::to_string(i)) return false;
  }
  return true;
}

Vertex LabelTable::lookup(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) throw ParseError("unknown label '" + std::string(name) + "'");
  return it->second;
}

// ------------------------------------------------------------------- .tour

TournamentFile parse_tournament(std::string_view text) {
  std::optional<std::vector<std::string>> names;
  std::optional<std::size_t> n;
  std::vector<std::uint8_t> beats;
  std::size_t rows = 0;
  std::size_t last_line = 0;

  for (const auto& line : lines_of(text)) {
    last_line = line.number;
    if (!n && line.comment.starts_with(kLabelsKey)) {
      if (names) fail(line.number, "second labels line");
      names.emplace();
      for (auto tok : split_ws(line.comment.substr(kLabelsKey.size()))) {
        names->emplace_back(tok);
      }
    }
    if (line.content.empty()) continue;

    if (!n) {
      std::size_t value = 0;
      const auto* end = line.content.data() + line.content.size();
      const auto [ptr, ec] = std::from_chars(line.content.data(), end, value);
      if (ec != std::errc{} || ptr != end) fail(line.number, "expected vertex count");
      if (value == 0) fail(line.number, "vertex count must be at least 1");
      n = value;
      beats.reserve(value * value);
      continue;
    }
    if (rows == *n) fail(line.number, "more than " + std::to_string(*n) + " rows");
    if (line.content.size() != *n) {
      fail(line.number, "row has " + std::to_string(line.content.size()) +
                            " characters, expected " + std::to_string(*n));
    }
    for (char c : line.content) {
      if (c != '0' && c != '1') fail(line.number, "row characters must be '0' or '1'");
      beats.push_back(c == '1' ? 1 : 0);
    }
    ++rows;
  }
  if (!n) throw ParseError("missing vertex count");
  if (rows != *n) {
    fail(last_line, "found " + std::to_string(rows) + " rows, expected " + std::to_string(*n));
  }
  if (names && names->size() != *n) {
    throw ParseError("labels line names " + std::to_string(names->size()) +
                     " vertices, expected " + std::to_string(*n));
  }
  try {
    Tournament t(*n, std::move(beats));
    return {std::move(t), names ? LabelTable(std::move(*names)) : LabelTable::integers(*n)};
  } catch (const InvalidTournamentError& e) {
    throw ParseError(e.what());
  }
}

TournamentFile read_tournament(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_tournament(text);
}

std::string format_tournament(const Tournament& t, const LabelTable& labels) {
  std::string out;
  if (!labels.is_default()) {
    out += "# labels:";
    for (const auto& s : labels.names()) out += " " + s;
    out += "\n";
  }
  out += std::to_string(t.size()) + "\n";
  for (Vertex i = 0; i < t.size(); ++i) {
    for (Vertex j = 0; j < t.size(); ++j) out += t.beats(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string format_tournament(const Tournament& t) {
  return format_tournament(t, LabelTable::integers(t.size()));
}

// ------------------------------------------------------------------ .votes

Profile parse_votes(std::string_view text, const LabelTable& labels) {
  Profile p(labels.size());
  std::vector<Vertex> order;
  for (const auto& line : lines_of(text)) {
    if (line.content.empty()) continue;
    order.clear();
    for (auto tok : split_ws(line.content)) {
      try {
        order.push_back(labels.lookup(tok));
      } catch (const ParseError& e) {
        fail(line.number, e.what());
      }
    }
    try {
      p.append(Ranking(order));
    } catch (const MalformedProfileError& e) {
      fail(line.number, std::string("voter does not rank every candidate once: ") + e.what());
    }
  }
  return p;
}

Profile read_votes(std::istream& in, const LabelTable& labels) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_votes(text, labels);
}

std::string format_votes(const Profile& p, const LabelTable& labels) {
  std::string out;
  for (const auto& voter : p.voters()) {
    bool first = true;
    for (Vertex v : voter) {
      if (!first) out += ' ';
      out += labels.name(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::string format_votes(const Profile& p) {
  return format_votes(p, LabelTable::integers(p.candidates()));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace tourvote
