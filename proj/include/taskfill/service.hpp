#pragma once

#include <atomic>
#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "taskfill/checkpoint.hpp"

namespace taskfill {

struct ServiceConfig {
    std::string host = "127.0.0.1";
    int port = 8080;
    std::string checkpoint;
    int max_concurrent = 2;
    std::size_t max_body_bytes = 1 << 20;
    int default_steps = 50;

    /// Throws std::invalid_argument when a limit is not positive.
    void validate() const;
    /// TASKFILL_BIND ("host:port" or "port") and TASKFILL_CHECKPOINT override the fields they name.
    void apply_environment();
};

struct HttpReply {
    int status = 200;
    nlohmann::json body;
};

/// Endpoint logic over one frozen checkpoint; usable without a socket.
class InpaintService {
public:
    InpaintService(ModelBundle model, ServiceConfig cfg);

    HttpReply health() const;
    HttpReply tasks() const;
    HttpReply handle_inpaint(const std::string& body);

    const ServiceConfig& config() const { return cfg_; }
    ModelBundle& model() { return model_; }
    int in_flight() const { return in_flight_.load(); }

    /// Blocks serving HTTP until stop() (or a signal handler calling it).
    void serve();
    void stop();

private:
    HttpReply inpaint_locked(const nlohmann::json& request);

    ModelBundle model_;
    ServiceConfig cfg_;
    std::atomic<int> in_flight_{0};
    void* server_ = nullptr;
};

}  // namespace taskfill
