#pragma once

// Session files, command dispatch and report rendering for the diffchow tool.
//
// Session file, one statement per line, '#' starts a comment:
//   field Q | Qx
//   vars y1 y2
//   params u0_0 u0_1
//   ranking orderly | orderly:y2<y1 | elim:y1<y2
//   let NAME = EXPR
//   poly [NAME =] EXPR

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "diffchow/reduction.hpp"

namespace diffchow {

enum class Field { Q, Qx };

struct Session {
  Field field = Field::Q;
  /// Main symbols in declaration order.
  std::vector<Var> vars;
  std::vector<Var> params;
  Ranking ranking;
  std::string ranking_text = "orderly";
  std::map<std::string, Poly> names;
  std::vector<Poly> polys;
  /// Name of each poly ("" when anonymous).
  std::vector<std::string> poly_names;
};

Field parse_field(const std::string& s);
std::string to_string(Field f);

/// Ranking over `vars` from "orderly", "orderly:a<b<..." or "elim:a<b<...".
Ranking parse_ranking(const std::string& spec, const std::vector<Var>& vars);

/// Parses a session file. The overrides replace the file's field/ranking.
/// Throws ParseError (with line prefix) or UsageError.
Session parse_session(const std::string& text, std::optional<Field> field_override = {},
                      std::optional<std::string> ranking_override = {});

/// "1,1;0,1" -> rows of field constants.
std::vector<std::vector<Coeff>> parse_matrix(const std::string& text, Field field);

/// Nested key-value report; insertion order is preserved.
struct Node {
  struct Scalar {
    std::string text;
    bool quoted = false;
  };
  using List = std::vector<Node>;
  using Map = std::vector<std::pair<std::string, Node>>;
  std::variant<Scalar, List, Map> value = Map{};

  static Node str(std::string s) { return Node{Scalar{std::move(s), true}}; }
  static Node num(long v) { return Node{Scalar{std::to_string(v), false}}; }
  static Node flag(bool b) { return Node{Scalar{b ? "true" : "false", false}}; }
  static Node list() { return Node{List{}}; }
  static Node map() { return Node{Map{}}; }

  /// Appends to a map node.
  Node& set(const std::string& key, Node v);
  /// Appends to a list node.
  Node& push(Node v);
};

struct CommandOptions {
  std::string command;
  std::optional<std::string> target;
  std::uint32_t order = 0;
  std::uint32_t degree = 1;
  bool hyperplane = false;
  std::optional<std::string> matrix;
  int bound = 0;
  std::optional<std::uint64_t> seed;
};

struct Outcome {
  int exit_code = 0;
  std::string command;
  /// Plain-text lines.
  std::vector<std::string> text;
  /// Machine-readable result.
  Node result = Node::map();
  /// Error kind and message when exit_code != 0.
  std::string error_kind;
  std::string error_message;
};

/// Commands: reduce, charset, dimord, intersect-generic, chow, verify, transform.
/// Mathematical failures give exit code 1, usage errors 2.
Outcome run_command(const Session& session, const CommandOptions& opts);

/// Runs the command and converts thrown errors into an Outcome.
Outcome run_safely(const std::string& session_text, std::optional<Field> field,
                   std::optional<std::string> ranking, const CommandOptions& opts);

std::string render_text(const Outcome& o);
std::string render_machine(const Outcome& o);

/// "2*t+5", "t+1", "1".
std::string format_dimension_polynomial(int d, int h);

}  // namespace diffchow
