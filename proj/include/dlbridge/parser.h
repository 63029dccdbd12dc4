// Text formats: .onto ontologies, .dlp dl-programs, .dth default theories.

#ifndef DLBRIDGE_PARSER_H_
#define DLBRIDGE_PARSER_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dlbridge/syntax.h"

namespace dlbridge {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

// Throws ParseError at the first byte that is not well-formed UTF-8.
void check_utf8(std::string_view text);

Ontology parse_ontology(std::string_view text);
// Names used in dl-atoms but missing from the ontology are declared by
// context; program constants become individuals. Rules with variables are
// instantiated over the program constants.
DLProgram parse_program(std::string_view text, const Ontology& ontology = {});
DefaultTheory parse_default_theory(std::string_view text);
Formula parse_formula(std::string_view text);

// The path named by a leading #ontology directive, or empty.
std::string ontology_reference(std::string_view program_text);

std::string read_file(const std::filesystem::path& p);
Ontology load_ontology(const std::filesystem::path& p);
// Resolves #ontology relative to the program file.
DLProgram load_program(const std::filesystem::path& p);
DefaultTheory load_default_theory(const std::filesystem::path& p);

}  // namespace dlbridge

#endif  // DLBRIDGE_PARSER_H_
