#include "chartalt/vlm.hpp"

#include <chrono>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "chartalt/base64.hpp"
#include "chartalt/errors.hpp"

namespace chartalt {

namespace {

constexpr char kBase64Alphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

const char* kPromptHeader =
    "You are a helpful assistant that describes figures. Here are two example descriptions:";

const char* kExample1L1 =
    "This is a vertical bar chart entitled 'COVID-19 mortality rate by age' that plots Mortality "
    "rate by Age. Mortality rate is plotted on the vertical y-axis from 0 to 15%. Age is plotted "
    "on the horizontal x-axis in bins: 10-19, 20-29, 30-39, 40-49, 50-59, 60-69, 70-79, 80+.";

const char* kExample2L1 =
    "This is a line chart titled 'Big Tech Stock Prices' that plots price by date. The "
    "corporations include AAPL (Apple), AMZN (Amazon), GOOG (Google), IBM (IBM), and MSFT "
    "(Microsoft). The years are plotted on the horizontal x-axis from 2000 to 2010 with an "
    "increment of 2 years. The prices are plotted on the vertical y-axis from 0 to 800 with an "
    "increment of 200.";

const char* kExample1L2Add =
    " The highest COVID-19 mortality rate is in the 80+ age range, while the lowest mortality "
    "rate is in 10-19, 20-29, 30-39, sharing the same rate. COVID-19 mortality rate does not "
    "linearly correspond to the demographic age.";

const char* kExample2L2Add =
    " GOOG has the greatest price over time. MSFT has the lowest price over time.";

const char* kExample1L3Add =
    " The mortality rate increases with age, especially around 40-49 years and upwards. The "
    "mortality rate increases exponentially with older people.";

const char* kExample2L3Add =
    " Prices of particular Big Tech corporations seem to fluctuate but nevertheless increase "
    "over time. Years 2008-2009 are exceptions as we can see an extreme drop in prices of all "
    "given corporations.";

const char* kExample1L4 =
    "This is a vertical bar chart entitled 'COVID-19 mortality rate by age' that plots Mortality "
    "rate by Age. Mortality rate is plotted on the vertical y-axis from 0 to 15%. Age is plotted "
    "on the horizontal x-axis in bins: 10-19, 20-29, 30-39, 40-49, 50-59, 60-69, 70-79, 80+. The "
    "highest COVID-19 mortality rate is in the 80+ age range, while the lowest mortality rate is "
    "in 10-19, 20-29, 30-39, sharing the same rate. COVID-19 mortality rate does not linearly "
    "correspond to the demographic age. The mortality rate increases with age, especially around "
    "40-49 years and upwards. This relates to people’s decrease in their immunity and the "
    "increase of co-morbidity with age. The mortality rate increases exponentially with older "
    "people.";

const char* kExample2L4Add =
    " The big drop in prices was caused by financial crisis of 2007-2008. The crisis culminated "
    "with the bankruptcy of Lehman Brothers on September 15, 2008 and an international banking "
    "crisis.";

const char* kGroundingPrefix =
    "You already know the following information about this figure and its data: '";

std::string example1(int level) {
    std::string s = kExample1L1;
    if (level >= 2) s += kExample1L2Add;
    if (level == 3) s += kExample1L3Add;
    if (level >= 4) return kExample1L4;
    return s;
}

std::string example2(int level) {
    std::string s = kExample2L1;
    if (level >= 2) s += kExample2L2Add;
    if (level >= 3) s += kExample2L3Add;
    if (level >= 4) s += kExample2L4Add;
    return s;
}

std::string instruction(int level, int max_tokens, bool include_visual_attrs) {
    std::string s;
    if (level <= 1) {
        s = "Only include information about the chart type, title, axis ranges, and labels.";
    } else if (level == 2) {
        s = "Include information about the chart type, title, axis ranges, and labels. If "
            "possible, describe statistics, extrema, outliers, correlations, and point-wise "
            "comparisons between variables.";
    } else {
        s = "Include information about the chart type, title, axis ranges, and labels. If "
            "possible, describe statistics, extrema, outliers, correlations, point-wise "
            "comparisons, and trends for each plotted variable.";
        if (level >= 4) {
            s += " If possible, briefly explain domain-specific insights, current events, and "
                 "socio-political context that explain the data.";
        }
    }
    if (include_visual_attrs) {
        s += " Also describe the figure's colors, sizes, textures.";
    }
    s += " Be concise and limit your response to " + std::to_string(max_tokens) + " tokens.";
    return s;
}

}  // namespace

std::string base64_encode(const std::vector<std::uint8_t>& data) {
    std::string out;
    out.reserve((data.size() + 2) / 3 * 4);
    for (std::size_t i = 0; i < data.size(); i += 3) {
        const std::uint32_t b0 = data[i];
        const std::uint32_t b1 = i + 1 < data.size() ? data[i + 1] : 0;
        const std::uint32_t b2 = i + 2 < data.size() ? data[i + 2] : 0;
        const std::uint32_t triple = (b0 << 16) | (b1 << 8) | b2;
        out += kBase64Alphabet[(triple >> 18) & 0x3f];
        out += kBase64Alphabet[(triple >> 12) & 0x3f];
        out += i + 1 < data.size() ? kBase64Alphabet[(triple >> 6) & 0x3f] : '=';
        out += i + 2 < data.size() ? kBase64Alphabet[triple & 0x3f] : '=';
    }
    return out;
}

std::vector<std::uint8_t> base64_decode(const std::string& text) {
    auto value = [](char c) -> int {
        if (c >= 'A' && c <= 'Z') return c - 'A';
        if (c >= 'a' && c <= 'z') return c - 'a' + 26;
        if (c >= '0' && c <= '9') return c - '0' + 52;
        if (c == '+') return 62;
        if (c == '/') return 63;
        return -1;
    };
    std::vector<std::uint8_t> out;
    std::uint32_t buffer = 0;
    int bits = 0;
    for (char c : text) {
        const int v = value(c);
        if (v < 0) continue;  // skip '=', whitespace
        buffer = (buffer << 6) | static_cast<std::uint32_t>(v);
        bits += 6;
        if (bits >= 8) {
            bits -= 8;
            out.push_back(static_cast<std::uint8_t>((buffer >> bits) & 0xff));
        }
    }
    return out;
}

PromptBundle build_prompt(int desc_level, int max_tokens, Augmentation augmentation,
                          const std::optional<std::string>& heuristic_text,
                          const std::optional<std::string>& table_markdown,
                          bool include_visual_attrs) {
    const bool wants_heuristic =
        augmentation == Augmentation::heuristic || augmentation == Augmentation::heuristic_and_table;
    const bool wants_table =
        augmentation == Augmentation::table || augmentation == Augmentation::heuristic_and_table;
    if (wants_heuristic && !heuristic_text) {
        throw MissingAugmentationError("heuristic augmentation requested without heuristic text");
    }
    if (wants_table && !table_markdown) {
        throw MissingAugmentationError("table augmentation requested without a table");
    }

    PromptBundle bundle;
    bundle.desc_level = desc_level;
    bundle.max_tokens = max_tokens;
    bundle.include_visual_attrs = include_visual_attrs;

    std::string s = kPromptHeader;
    s += "\n1. '" + example1(desc_level) + "'";
    s += "\n2. '" + example2(desc_level) + "'";
    s += "\n\n";
    if (wants_heuristic || wants_table) {
        std::string known;
        if (wants_heuristic) known = *heuristic_text;
        if (wants_table) {
            if (!known.empty()) known += "\n";
            known += *table_markdown;
        }
        s += kGroundingPrefix + known + "'.";
        s += "\n\n";
    }
    s += instruction(desc_level, max_tokens, include_visual_attrs);
    bundle.system_text = std::move(s);
    return bundle;
}

std::string resolve_api_key(const ApiConfig& config) {
    if (!config.api_key.empty()) return config.api_key;
    if (const char* env = std::getenv("ALT_API_KEY")) return env;
    return {};
}

std::string HttpBackend::request_body(const PromptBundle& prompt, const ApiConfig& config) {
    nlohmann::json user_content = nlohmann::json::array();
    for (const auto& part : prompt.user_parts) {
        if (part.image) {
            user_content.push_back(
                {{"type", "image_url"},
                 {"image_url", {{"url", "data:image/png;base64," + base64_encode(*part.image)}}}});
        } else if (part.text) {
            user_content.push_back({{"type", "text"}, {"text", *part.text}});
        }
    }
    nlohmann::json body = {
        {"model", config.model_name},
        {"max_tokens", prompt.max_tokens},
        {"messages",
         {{{"role", "system"}, {"content", prompt.system_text}},
          {{"role", "user"}, {"content", user_content}}}},
    };
    if (config.temperature) body["temperature"] = *config.temperature;
    return body.dump();
}

std::string HttpBackend::complete(const PromptBundle& prompt, const ApiConfig& config) {
    const auto scheme_end = config.endpoint_url.find("://");
    if (scheme_end == std::string::npos) throw Error("endpoint url missing scheme: " + config.endpoint_url);
    const auto path_start = config.endpoint_url.find('/', scheme_end + 3);
    const std::string origin =
        path_start == std::string::npos ? config.endpoint_url : config.endpoint_url.substr(0, path_start);
    const std::string path = path_start == std::string::npos ? "/" : config.endpoint_url.substr(path_start);

    const std::string body = request_body(prompt, config);
    httplib::Headers headers;
    const std::string key = resolve_api_key(config);
    if (!key.empty()) headers.emplace("Authorization", "Bearer " + key);

    std::string last_payload;
    for (int attempt = 0; attempt <= config.max_retries; ++attempt) {
        httplib::Client client(origin);
        client.set_connection_timeout(std::chrono::milliseconds(
            static_cast<int>(config.timeout_seconds * 1000)));
        client.set_read_timeout(std::chrono::milliseconds(
            static_cast<int>(config.timeout_seconds * 1000)));

        auto res = client.Post(path, headers, body, "application/json");
        if (!res) {
            const auto err = res.error();
            if (err == httplib::Error::ConnectionTimeout || err == httplib::Error::Read ||
                err == httplib::Error::Write) {
                throw TimeoutError(httplib::to_string(err));
            }
            throw TimeoutError("transport failure: " + httplib::to_string(err));
        }
        if (res->status == 401 || res->status == 403) throw AuthError(res->body);
        if (res->status == 429) {
            last_payload = res->body;
            if (attempt == config.max_retries) throw RateLimitError(last_payload);
            std::this_thread::sleep_for(std::chrono::milliseconds(100 << attempt));
            continue;
        }
        if (res->status != 200) throw MalformedResponseError(res->body);
        try {
            const auto json = nlohmann::json::parse(res->body);
            return json.at("choices").at(0).at("message").at("content").get<std::string>();
        } catch (const nlohmann::json::exception&) {
            throw MalformedResponseError(res->body);
        }
    }
    throw RateLimitError(last_payload);
}

std::string StubBackend::complete(const PromptBundle& prompt, const ApiConfig&) {
    seen_.push_back(prompt);
    switch (mode_) {
        case Mode::fixed: return fixed_;
        case Mode::echo_system: return prompt.system_text;
        case Mode::throw_auth: throw AuthError("stub auth failure");
        case Mode::throw_rate_limit: throw RateLimitError("stub rate limit");
        case Mode::throw_timeout: throw TimeoutError("stub timeout");
    }
    return fixed_;
}

AltText generate_api_alt_text(const FigureFacts& figure, const VlmOptions& options,
                              Augmentation augmentation, const ApiConfig& config,
                              VlmBackend& backend) {
    if (figure.image_bytes.empty()) throw Error("figure has no rendered image bytes");

    std::optional<std::string> heuristic_text;
    std::optional<std::string> table_markdown;
    if (augmentation == Augmentation::heuristic || augmentation == Augmentation::heuristic_and_table ||
        augmentation == Augmentation::table) {
        DescriptionOptions h = options.heuristic_options;
        h.desc_level = std::min(options.desc_level, 3);
        h.include_table = augmentation != Augmentation::heuristic;
        const AltText base = generate_alt_text(figure, h);
        if (augmentation != Augmentation::table) heuristic_text = base.text;
        if (h.include_table && base.table_markdown) table_markdown = base.table_markdown;
        if (h.include_table && !base.table_markdown) {
            throw MissingAugmentationError("table augmentation requested but figure has no tabular data");
        }
    }

    PromptBundle prompt = build_prompt(options.desc_level, options.max_tokens, augmentation,
                                       heuristic_text, table_markdown, options.include_visual_attrs);
    PromptPart image_part;
    image_part.image = figure.image_bytes;
    prompt.user_parts.push_back(std::move(image_part));

    AltText alt;
    alt.level = options.desc_level;
    alt.text = backend.complete(prompt, config);
    alt.segments.resize(figure.subplots.empty() ? 1 : figure.subplots.size());
    if (!alt.segments.empty()) alt.segments[0].l1 = alt.text;
    if (table_markdown) alt.table_markdown = table_markdown;
    return alt;
}

AltText generate_api_alt_text(const FigureFacts& figure, const VlmOptions& options,
                              Augmentation augmentation, const ApiConfig& config) {
    HttpBackend backend;
    return generate_api_alt_text(figure, options, augmentation, config, backend);
}

}  // namespace chartalt
