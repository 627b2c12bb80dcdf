#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "mgan/numerics/layers.hpp"

namespace mgan {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Binary tensor container:
//   "MGAN" | version u32 | { name_len u32 | name bytes | rank u32 | extents u32[rank] | f32[numel] }*
// All integers and floats little-endian. Records run to end of stream.
class Checkpoint {
 public:
  static constexpr std::uint32_t kVersion = 1;

  struct Record {
    std::string name;
    Shape shape;
    std::vector<float> data;
  };

  template <typename T>
  void put(const std::string& name, const Tensor<T>& t) {
    Record r{name, t.shape(), {}};
    r.data.reserve(t.size());
    for (const T& v : t.data()) r.data.push_back(static_cast<float>(v));
    put_record(std::move(r));
  }
  void put_scalar(const std::string& name, double v) { put(name, Tensor<double>({1}, std::vector<double>{v})); }

  template <typename T>
  void put_params(const ParamSet<T>& ps) {
    for (const auto& p : ps.params()) put(p.name, p.var.value());
  }

  bool contains(const std::string& name) const;
  const Record& get(const std::string& name) const;
  template <typename T>
  Tensor<T> tensor(const std::string& name) const {
    const Record& r = get(name);
    std::vector<T> data(r.data.begin(), r.data.end());
    return Tensor<T>(r.shape, std::move(data));
  }
  double scalar(const std::string& name, double fallback) const;

  // Copies every parameter of `ps` from the container; shapes must match.
  template <typename T>
  void load_params(ParamSet<T>& ps) const {
    for (const auto& p : ps.params()) {
      const Record& r = get(p.name);
      if (r.shape != p.var.shape()) {
        throw FormatError("checkpoint entry " + p.name + " has shape " + shape_str(r.shape) + ", expected " +
                          shape_str(p.var.shape()));
      }
      Var<T> v = p.var;
      auto& dst = v.mutable_value().vec();
      for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = static_cast<T>(r.data[i]);
    }
  }

  const std::vector<Record>& records() const { return records_; }

  std::string to_bytes() const;
  static Checkpoint from_bytes(const std::string& bytes);
  void save(const std::filesystem::path& path) const;
  static Checkpoint load(const std::filesystem::path& path);

 private:
  void put_record(Record r);
  std::vector<Record> records_;
};

}  // namespace mgan
