#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pda/numeric.hpp"
#include "pda/pda.hpp"

namespace pda {

// Packet j of file i, i.e. W_{i,j}.
struct PacketId {
  int file;
  int packet;

  friend auto operator<=>(const PacketId&, const PacketId&) = default;
};

struct PayloadSpec {
  std::uint64_t seed = 1;
  int bytes_per_packet = 64;
};

// A (K, M, N) system bound to a PDA: user k caches packet j of every file
// whenever column k holds a star in row j. Optionally carries deterministic
// pseudo-random file bytes so decoding can be checked bit-exactly. Immutable
// after place().
class CachingInstance {
 public:
  const Pda& pda() const { return pda_; }
  int files() const { return files_; }

  // Star rows of column `user`, ascending.
  const std::vector<int>& cache_rows(int user) const;
  bool caches(int user, PacketId id) const;
  // N * Z: packet ids held by one user.
  std::int64_t cache_packet_count(int user) const;

  // Occurrence coordinates (row, col) per symbol, row-major.
  const std::vector<std::vector<std::pair<int, int>>>& occurrences() const {
    return occurrences_;
  }

  bool has_payloads() const { return bytes_per_packet_ > 0; }
  int bytes_per_packet() const { return bytes_per_packet_; }
  // Ground-truth bytes of packet (file, packet); instance must carry payloads.
  const std::uint8_t* packet_bytes(PacketId id) const;

 private:
  friend CachingInstance place(const Pda& p, int n_files,
                               const std::optional<PayloadSpec>& payloads);

  CachingInstance(Pda p, int n_files) : pda_(std::move(p)), files_(n_files) {}

  Pda pda_;
  int files_;
  std::vector<std::vector<int>> cache_rows_;  // per user, ascending
  std::vector<std::vector<std::pair<int, int>>> occurrences_;
  int bytes_per_packet_ = 0;
  std::vector<std::vector<std::uint8_t>> file_bytes_;  // per file, F * L bytes
};

// Builds the placement. Throws InvalidPda when validate(p) fails and
// NTooSmall when n_files < K.
CachingInstance place(const Pda& p, int n_files,
                      const std::optional<PayloadSpec>& payloads = std::nullopt);

// Broadcast slot s: the XOR of W_{d_k, j} over all cells p(j, k) = s.
struct Transmission {
  std::int64_t slot;
  std::vector<PacketId> summands;      // occurrence order
  std::vector<std::uint8_t> payload;   // XOR of packet bytes; empty when unbound
};

// All S slots, in order, for the given demand (length K, entries in [0, N)).
// Throws BadDemand.
std::vector<Transmission> deliver(const CachingInstance& inst,
                                  const std::vector<int>& demand);

// Packets user k recovers from the schedule: one per slot whose column-k cell
// carries that slot's symbol, cancelling the other summands from cache.
// Throws MissingSideInfo if a needed summand is not cached (unreachable for
// validated arrays) and Error if a bound payload fails the byte check.
std::vector<PacketId> decode(const CachingInstance& inst, const std::vector<int>& demand,
                             const std::vector<Transmission>& schedule, int user);

struct DecodeReport {
  std::vector<std::vector<PacketId>> recovered;  // per user
  bool complete = false;   // every user holds all F packets of its file
  bool bytes_ok = false;   // payload XOR checks passed (true when unbound)
  std::vector<std::string> trace;  // "user 4: slot 1 -> W(4,1)" lines
};

DecodeReport decode_all(const CachingInstance& inst, const std::vector<int>& demand,
                        const std::vector<Transmission>& schedule);

struct VerifyMode {
  enum class Kind { kExhaustive, kSample };

  Kind kind = Kind::kExhaustive;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t cap = 1000000;  // exhaustive guard on N^K

  static VerifyMode exhaustive(std::uint64_t cap = 1000000);
  static VerifyMode sample(std::uint64_t count, std::uint64_t seed);
};

struct VerifySummary {
  std::uint64_t demands = 0;
  std::uint64_t ok = 0;
  Rational max_rate;  // max over demands of slots/F; S/F for valid arrays

  // "demands=<n> ok=<n> rate=<r>"
  std::string summary_line() const;
};

// Runs deliver + decode_all over every demand (exhaustive, lexicographic
// order) or `samples` seeded draws. Counts a demand as ok when decoding is
// complete and, with payloads bound, byte-exact. Writes one line per demand
// to `log` when given. Throws CapExceeded when N^K exceeds the cap.
VerifySummary verify_demands(const CachingInstance& inst, const VerifyMode& mode,
                             std::ostream* log = nullptr);

}  // namespace pda
