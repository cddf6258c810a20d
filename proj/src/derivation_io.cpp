// SPDX-License-Identifier: Apache-2.0

#include "dtt/derivation_io.hpp"

#include <cctype>
#include <sstream>

#include "dtt/text.hpp"

namespace dtt {

namespace {

// ---- writing ---------------------------------------------------------------

void indent(std::string& out, int n) { out.append(std::size_t(n) * 2, ' '); }

void write_dil_rec(const DilDerivation& d, int depth, std::string& out) {
  indent(out, depth);
  out += "(rule ";
  out += dil_rule_name(d.rule);
  out += "\n";
  indent(out, depth + 1);
  out += ":conclusion \"" + to_text(d.conclusion) + "\"\n";
  indent(out, depth + 1);
  out += ":witness (";
  bool first = true;
  auto field = [&](const std::string& key, const std::string& value) {
    if (!first) out += ' ';
    first = false;
    out += key + " " + value;
  };
  if (d.witness.index) field("index", std::to_string(*d.witness.index));
  if (d.witness.d) field("d", std::to_string(*d.witness.d));
  if (d.witness.fresh) field("fresh", d.witness.fresh->name);
  if (d.witness.node) field("node", d.witness.node->name);
  if (d.witness.cut_formula)
    field("formula", "\"" + to_text(*d.witness.cut_formula) + "\"");
  if (d.witness.cut_node) field("cutnode", d.witness.cut_node->name);
  out += ")\n";
  indent(out, depth + 1);
  out += ":children (";
  if (!d.children.empty()) {
    out += "\n";
    for (const auto& c : d.children) write_dil_rec(c, depth + 2, out);
    indent(out, depth + 1);
  }
  out += "))\n";
}

void write_l_rec(const LDerivation& d, int depth, std::string& out) {
  indent(out, depth);
  out += "(rule ";
  out += l_rule_name(d.rule);
  out += "\n";
  indent(out, depth + 1);
  out += ":conclusion \"" + to_text(d.conclusion) + "\"\n";
  indent(out, depth + 1);
  out += ":witness (";
  bool first = true;
  auto field = [&](const std::string& key, const std::string& value) {
    if (!first) out += ' ';
    first = false;
    out += key + " " + value;
  };
  if (d.witness.left_index) field("left", std::to_string(*d.witness.left_index));
  if (d.witness.right_index)
    field("right", std::to_string(*d.witness.right_index));
  if (d.witness.node) field("node", d.witness.node->name);
  if (d.witness.node2) field("node2", d.witness.node2->name);
  if (d.witness.node3) field("node3", d.witness.node3->name);
  if (d.witness.fresh) field("fresh", d.witness.fresh->name);
  out += ")\n";
  indent(out, depth + 1);
  out += ":children (";
  if (!d.children.empty()) {
    out += "\n";
    for (const auto& c : d.children) write_l_rec(c, depth + 2, out);
    indent(out, depth + 1);
  }
  out += "))\n";
}

// ---- reading ---------------------------------------------------------------

struct SToken {
  enum class Kind { LParen, RParen, Keyword, String, Int, Symbol, End } kind;
  std::string text;
  long value = 0;
  int line = 1, col = 1;
};

std::vector<SToken> slex(const std::string& text) {
  std::vector<SToken> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') { ++line; col = 1; ++i; continue; }
    if (std::isspace((unsigned char)c)) { ++col; ++i; continue; }
    SToken t;
    t.line = line;
    t.col = col;
    if (c == '(') { t.kind = SToken::Kind::LParen; ++i; ++col; }
    else if (c == ')') { t.kind = SToken::Kind::RParen; ++i; ++col; }
    else if (c == '"') {
      std::size_t j = text.find('"', i + 1);
      if (j == std::string::npos)
        throw ParseError("unterminated string", line, col);
      t.kind = SToken::Kind::String;
      t.text = text.substr(i + 1, j - i - 1);
      col += int(j - i + 1);
      i = j + 1;
    } else if (c == ':') {
      std::size_t j = i + 1;
      while (j < text.size() && (std::isalnum((unsigned char)text[j]) || text[j] == '_')) ++j;
      t.kind = SToken::Kind::Keyword;
      t.text = text.substr(i + 1, j - i - 1);
      col += int(j - i);
      i = j;
    } else if (std::isdigit((unsigned char)c) ||
               (c == '-' && i + 1 < text.size() &&
                std::isdigit((unsigned char)text[i + 1]))) {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
      t.kind = SToken::Kind::Int;
      t.text = text.substr(i, j - i);
      t.value = std::stol(t.text);
      col += int(j - i);
      i = j;
    } else if (std::isalpha((unsigned char)c)) {
      std::size_t j = i + 1;
      while (j < text.size() &&
             (std::isalnum((unsigned char)text[j]) || text[j] == '_' ||
              text[j] == '%' || text[j] == '\''))
        ++j;
      t.kind = SToken::Kind::Symbol;
      t.text = text.substr(i, j - i);
      col += int(j - i);
      i = j;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(std::move(t));
  }
  SToken end;
  end.kind = SToken::Kind::End;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

struct SReader {
  std::vector<SToken> toks;
  std::size_t pos = 0;

  const SToken& peek() const { return toks[pos]; }
  SToken eat(SToken::Kind k, const char* what) {
    if (peek().kind != k)
      throw ParseError(std::string("expected ") + what, peek().line, peek().col);
    return toks[pos++];
  }
  bool at(SToken::Kind k) const { return peek().kind == k; }

  struct RawWitness {
    std::optional<long> index, d, left, right;
    std::optional<std::string> fresh, node, node2, node3;
    std::optional<std::string> formula;  // quoted
    std::optional<std::string> cutnode;
  };

  struct RawNode {
    std::string rule;
    std::string conclusion;
    RawWitness witness;
    std::vector<RawNode> children;
  };

  RawNode node() {
    eat(SToken::Kind::LParen, "(");
    SToken head = eat(SToken::Kind::Symbol, "'rule'");
    if (head.text != "rule")
      throw ParseError("expected 'rule'", head.line, head.col);
    RawNode out;
    out.rule = eat(SToken::Kind::Symbol, "rule name").text;
    while (at(SToken::Kind::Keyword)) {
      SToken key = eat(SToken::Kind::Keyword, "keyword");
      if (key.text == "conclusion") {
        out.conclusion = eat(SToken::Kind::String, "quoted sequent").text;
      } else if (key.text == "witness") {
        eat(SToken::Kind::LParen, "(");
        while (!at(SToken::Kind::RParen)) {
          SToken k = eat(SToken::Kind::Symbol, "witness key");
          if (k.text == "index")
            out.witness.index = eat(SToken::Kind::Int, "integer").value;
          else if (k.text == "d")
            out.witness.d = eat(SToken::Kind::Int, "integer").value;
          else if (k.text == "left")
            out.witness.left = eat(SToken::Kind::Int, "integer").value;
          else if (k.text == "right")
            out.witness.right = eat(SToken::Kind::Int, "integer").value;
          else if (k.text == "fresh")
            out.witness.fresh = eat(SToken::Kind::Symbol, "node").text;
          else if (k.text == "node")
            out.witness.node = eat(SToken::Kind::Symbol, "node").text;
          else if (k.text == "node2")
            out.witness.node2 = eat(SToken::Kind::Symbol, "node").text;
          else if (k.text == "node3")
            out.witness.node3 = eat(SToken::Kind::Symbol, "node").text;
          else if (k.text == "formula")
            out.witness.formula = eat(SToken::Kind::String, "quoted formula").text;
          else if (k.text == "cutnode")
            out.witness.cutnode = eat(SToken::Kind::Symbol, "node").text;
          else
            throw ParseError("unknown witness key '" + k.text + "'", k.line, k.col);
        }
        eat(SToken::Kind::RParen, ")");
      } else if (key.text == "children") {
        eat(SToken::Kind::LParen, "(");
        while (!at(SToken::Kind::RParen)) out.children.push_back(node());
        eat(SToken::Kind::RParen, ")");
      } else {
        throw ParseError("unknown field :" + key.text, key.line, key.col);
      }
    }
    eat(SToken::Kind::RParen, ")");
    return out;
  }
};

DilDerivation to_dil(const SReader::RawNode& raw) {
  auto rule = dil_rule_from_name(raw.rule);
  if (!rule) throw ParseError("unknown rule '" + raw.rule + "'", 0, 0);
  DilDerivation out;
  out.rule = *rule;
  out.conclusion = parse_sequent(raw.conclusion);
  if (raw.witness.index) out.witness.index = int(*raw.witness.index);
  if (raw.witness.d) out.witness.d = int(*raw.witness.d);
  if (raw.witness.fresh) out.witness.fresh = NodeId{*raw.witness.fresh};
  if (raw.witness.node) out.witness.node = NodeId{*raw.witness.node};
  if (raw.witness.formula)
    out.witness.cut_formula = parse_formula(*raw.witness.formula);
  if (raw.witness.cutnode) out.witness.cut_node = NodeId{*raw.witness.cutnode};
  for (const auto& c : raw.children) out.children.push_back(to_dil(c));
  return out;
}

LDerivation to_l(const SReader::RawNode& raw) {
  auto rule = l_rule_from_name(raw.rule);
  if (!rule) throw ParseError("unknown rule '" + raw.rule + "'", 0, 0);
  LDerivation out;
  out.rule = *rule;
  out.conclusion = parse_lsequent(raw.conclusion);
  if (raw.witness.left) out.witness.left_index = int(*raw.witness.left);
  if (raw.witness.right) out.witness.right_index = int(*raw.witness.right);
  if (raw.witness.node) out.witness.node = NodeId{*raw.witness.node};
  if (raw.witness.node2) out.witness.node2 = NodeId{*raw.witness.node2};
  if (raw.witness.node3) out.witness.node3 = NodeId{*raw.witness.node3};
  if (raw.witness.fresh) out.witness.fresh = NodeId{*raw.witness.fresh};
  for (const auto& c : raw.children) out.children.push_back(to_l(c));
  return out;
}

}  // namespace

std::string write_dil_derivation(const DilDerivation& d) {
  std::string out;
  write_dil_rec(d, 0, out);
  return out;
}

DilDerivation read_dil_derivation(const std::string& text) {
  SReader r{slex(text)};
  auto raw = r.node();
  r.eat(SToken::Kind::End, "end of input");
  return to_dil(raw);
}

std::string write_l_derivation(const LDerivation& d) {
  std::string out;
  write_l_rec(d, 0, out);
  return out;
}

LDerivation read_l_derivation(const std::string& text) {
  SReader r{slex(text)};
  auto raw = r.node();
  r.eat(SToken::Kind::End, "end of input");
  return to_l(raw);
}

}  // namespace dtt
