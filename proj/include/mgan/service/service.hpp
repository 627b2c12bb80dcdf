#pragma once

#include <array>
#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "mgan/service/codec.hpp"
#include "mgan/training/trainer.hpp"

namespace httplib {
class Server;
}

namespace mgan::service {

// Carries the HTTP status and a machine-readable code to the transport layer.
class ServiceError : public std::runtime_error {
 public:
  ServiceError(int status, std::string code, const std::string& message)
      : std::runtime_error(message), status_(status), code_(std::move(code)) {}
  int status() const { return status_; }
  const std::string& code() const { return code_; }

 private:
  int status_;
  std::string code_;
};

using Rgb = std::array<double, 3>;

// Mean of `image` over pixels where `mask` is set; zero when the mask is empty.
Rgb mean_rgb(const TensorF& image, const TensorF& mask);
// "RRGGBB" or "#RRGGBB" to [0, 1] channels.
std::optional<Rgb> parse_hex_color(const std::string& text);
std::string hex_color(const Rgb& c);

struct ReferenceEntry {
  std::string id;
  TensorF image;  // (1, 3, H, W), doubles as the thumbnail
  TensorF mask;
  Rgb mean{};
};

class ReferenceLibrary {
 public:
  // Samples first_index .. first_index + n - 1 of the synthetic stream `seed`; with the trainer's
  // defaults these are its held-out images.
  static ReferenceLibrary synthetic(int n = 100, std::uint64_t seed = 1, std::uint64_t first_index = 512,
                                    int size = 64);
  // Every `<name>.png` with a sibling `<name>_mask.png`; ids are the names.
  static ReferenceLibrary import_folder(const std::filesystem::path& dir);

  void add(std::string id, TensorF image, TensorF mask);
  const std::vector<ReferenceEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  // Index into entries(), or -1.
  int find(const std::string& id) const;
  // Indices of the k nearest entries to `rgb` by Euclidean distance, ties broken by id.
  std::vector<int> knn(const Rgb& rgb, int k) const;

 private:
  std::vector<ReferenceEntry> entries_;
};

// Everything a generation needs, as single-image tensors.
struct EditInputs {
  TensorF image;        // I, (1, 3, H, W)
  TensorF source_mask;  // M_in: the hair currently in I
  TensorF mask;         // M: the hair to generate
  TensorF orientation;  // encoded O, (1, 2, H, W)
  TensorF ref_image, ref_mask;     // appearance reference, used when `code` is empty
  std::optional<TensorF> code;     // precomputed appearance code
};

// Deterministic for a given `seed`: the background noise and the dilation radius (0.05 W) are fixed.
TensorF run_edit(const training::ModelBundle& bundle, const EditInputs& in, std::uint64_t seed);

struct ServiceOptions {
  int library_size = 100;
  std::uint64_t library_seed = 1;
  std::uint64_t library_first_index = 512;
  std::uint64_t noise_seed = 2024;
  int max_extent = 512;
};

class Service {
 public:
  explicit Service(const ServiceOptions& opts = {});
  Service(const ServiceOptions& opts, ReferenceLibrary library);

  // Returns the checkpoint id (FNV-1a of the file bytes, hex).
  std::string load_checkpoint(const std::filesystem::path& path);
  // Installs an in-memory bundle under the given id.
  void install_bundle(std::shared_ptr<const training::ModelBundle> bundle, const std::string& id);
  void import_library(const std::filesystem::path& dir);
  bool has_checkpoint() const;

  nlohmann::json health() const;
  // Request bodies and responses mirror the HTTP endpoints.
  nlohmann::json create_session(const nlohmann::json& body);
  nlohmann::json generate(const std::string& id, const nlohmann::json& body);
  nlohmann::json apply_strokes(const std::string& id, const nlohmann::json& body);
  nlohmann::json set_mask(const std::string& id, const nlohmann::json& body);
  nlohmann::json state(const std::string& id) const;
  std::string orientation_png(const std::string& id) const;
  std::string orientation_field(const std::string& id) const;
  std::string result_png(const std::string& id) const;
  nlohmann::json knn(const std::string& rgb, const std::string& k) const;
  std::string thumbnail_png(const std::string& ref_id) const;

 private:
  struct Session;
  struct Runtime;

  std::shared_ptr<Session> session(const std::string& id) const;
  std::shared_ptr<const Runtime> runtime() const;
  void swap_runtime(std::shared_ptr<const Runtime> next);
  static std::shared_ptr<const Runtime> build_runtime(std::shared_ptr<const training::ModelBundle> bundle,
                                                      std::string id, std::shared_ptr<const ReferenceLibrary> lib);
  nlohmann::json session_json(const Session& s) const;

  ServiceOptions opts_;
  orientation::GaborBank bank_;
  mutable std::mutex runtime_mu_;
  std::shared_ptr<const Runtime> runtime_;
  mutable std::shared_mutex sessions_mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::atomic<long> next_session_{1};
};

// Registers every endpoint on `server`; errors are answered as JSON {code, message}.
void mount(httplib::Server& server, Service& service);

// Blocks until the server stops.
bool serve(Service& service, const std::string& host, int port);

}  // namespace mgan::service
