#pragma once

#include <filesystem>
#include <string>

#include "ecrep/conversation.hpp"

namespace ecrep {

/// The full prompt set: agent initialization prompts, the two data-injection
/// prompts, and the two evaluator prompt templates. The built-in catalog is
/// the canonical text; the same texts ship as data files so prompts stay
/// auditable and overridable per run.
struct PromptCatalog {
    std::string writer;
    std::string client;
    std::string analyst;
    std::string psychologist;
    std::string editor;

    std::string analyst_injection;      // precedes the serialized earnings record
    std::string psychologist_injection; // precedes the serialized feature blocks

    // Templates with {criterion}, {description}, {generated_report} and
    // {report1}, {report2} placeholders.
    std::string characteristic_eval;
    std::string preference_eval;

    static const PromptCatalog& builtin();

    /// Loads overrides from a directory of files named like the shipped
    /// data/prompts set (writer.txt, ..., eval_preference.txt). A single
    /// trailing newline per file is tolerated and stripped; everything else
    /// is taken byte-for-byte.
    static PromptCatalog load_dir(const std::filesystem::path& dir);

    const std::string& init_prompt(AgentRole role) const;
    const std::string& injection_prompt(AgentRole role) const;

    bool operator==(const PromptCatalog&) const = default;
};

} // namespace ecrep
