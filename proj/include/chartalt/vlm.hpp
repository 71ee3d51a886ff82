#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chartalt/figure_facts.hpp"
#include "chartalt/heuristic.hpp"

namespace chartalt {

enum class Augmentation { none, heuristic, table, heuristic_and_table };

struct PromptPart {
    // Exactly one of the two is set.
    std::optional<std::vector<std::uint8_t>> image;
    std::optional<std::string> text;
};

struct PromptBundle {
    std::string system_text;
    std::vector<PromptPart> user_parts;  // exactly one image part
    int max_tokens = 225;
    int desc_level = 3;
    bool include_visual_attrs = true;
};

struct ApiConfig {
    std::string endpoint_url = "https://api.openai.com/v1/chat/completions";
    std::string api_key;  // falls back to $ALT_API_KEY; never logged
    std::string model_name = "gpt-4-turbo";
    double timeout_seconds = 60.0;
    int max_retries = 3;
    std::optional<double> temperature;  // absent = provider default
};

// Builds the level-specific system prompt: two example descriptions, the
// optional "You already know ..." grounding line, and the instruction
// sentence with {max_tokens} substituted. Pure and deterministic.
// Throws MissingAugmentationError when the augmentation names absent text.
PromptBundle build_prompt(int desc_level, int max_tokens, Augmentation augmentation,
                          const std::optional<std::string>& heuristic_text,
                          const std::optional<std::string>& table_markdown,
                          bool include_visual_attrs);

// Transport abstraction; the stub backend keeps the test suite offline.
class VlmBackend {
public:
    virtual ~VlmBackend() = default;
    // Returns the model text; throws AuthError / RateLimitError /
    // TimeoutError / MalformedResponseError.
    virtual std::string complete(const PromptBundle& prompt, const ApiConfig& config) = 0;
};

// JSON chat-completions client over HTTPS. 429 responses are retried with
// exponential backoff up to config.max_retries.
class HttpBackend : public VlmBackend {
public:
    std::string complete(const PromptBundle& prompt, const ApiConfig& config) override;

    // Request body shaper, exposed for tests.
    static std::string request_body(const PromptBundle& prompt, const ApiConfig& config);
};

// Deterministic in-process backend for tests: replays a canned response or
// throws a canned error, and records every prompt it sees.
class StubBackend : public VlmBackend {
public:
    enum class Mode { fixed, echo_system, throw_auth, throw_rate_limit, throw_timeout };

    explicit StubBackend(Mode mode = Mode::fixed, std::string fixed_response = "a line chart.")
        : mode_(mode), fixed_(std::move(fixed_response)) {}

    std::string complete(const PromptBundle& prompt, const ApiConfig& config) override;

    const std::vector<PromptBundle>& seen() const { return seen_; }
    int calls() const { return static_cast<int>(seen_.size()); }

private:
    Mode mode_;
    std::string fixed_;
    std::vector<PromptBundle> seen_;
};

struct VlmOptions {
    int desc_level = 3;  // 1..4
    int max_tokens = 225;
    bool include_visual_attrs = true;
    // Heuristic options used when the augmentation needs generated text;
    // desc_level is capped at 3 for the heuristic side.
    DescriptionOptions heuristic_options;
};

// Sends the figure image plus the level prompt to the backend and returns
// the model text verbatim as AltText(level=desc_level). Augmentation text is
// produced by the heuristic generator when requested.
AltText generate_api_alt_text(const FigureFacts& figure, const VlmOptions& options,
                              Augmentation augmentation, const ApiConfig& config,
                              VlmBackend& backend);

// Convenience overload using the HTTPS backend.
AltText generate_api_alt_text(const FigureFacts& figure, const VlmOptions& options,
                              Augmentation augmentation, const ApiConfig& config);

// Resolves the key: config value or $ALT_API_KEY.
std::string resolve_api_key(const ApiConfig& config);

}  // namespace chartalt
