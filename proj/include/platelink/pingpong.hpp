#pragma once

#include <array>
#include <condition_variable>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

namespace platelink {

enum class SubmitResult { Accepted, Backpressure };

// Two single-frame slots. The producer fills the write slot, the consumer
// drains the read slot, and the roles swap once the read slot is empty and
// the write slot is full. Not thread-safe; see PingPongChannel.
template <typename T>
class PingPongBuffer {
public:
  // On backpressure the frame is left untouched so the caller can retry.
  SubmitResult submit(T&& frame) { return emplace(std::move(frame)); }
  SubmitResult submit(const T& frame) { return emplace(frame); }

  // Swaps roles if the read slot is drained and the write slot holds a frame.
  bool swap() {
    if (slots_[read_index_] || !slots_[write_index()]) return false;
    read_index_ = write_index();
    return true;
  }

  // Returns the read slot's frame, swapping first if needed; nullopt when
  // both slots are empty.
  std::optional<T> take() {
    if (!slots_[read_index_]) swap();
    auto& slot = slots_[read_index_];
    if (!slot) return std::nullopt;
    std::optional<T> out = std::move(slot);
    slot.reset();
    return out;
  }

  std::size_t read_index() const { return read_index_; }
  std::size_t write_index() const { return 1 - read_index_; }
  bool write_full() const { return slots_[write_index()].has_value(); }
  bool read_full() const { return slots_[read_index_].has_value(); }
  bool empty() const { return !write_full() && !read_full(); }

private:
  template <typename U>
  SubmitResult emplace(U&& frame) {
    auto& slot = slots_[write_index()];
    if (slot) return SubmitResult::Backpressure;
    slot.emplace(std::forward<U>(frame));
    return SubmitResult::Accepted;
  }

  std::array<std::optional<T>, 2> slots_;
  std::size_t read_index_ = 0;
};

// Blocking single-producer/single-consumer wrapper for stage threads. The
// first thread to push becomes the producer and the first to pop the
// consumer; any other thread touching the channel gets std::logic_error.
template <typename T>
class PingPongChannel {
public:
  // Blocks while the write slot is full. Returns false if the channel closed.
  bool push(T frame) {
    std::unique_lock lock(mutex_);
    claim(producer_, "producer");
    for (;;) {
      if (closed_) return false;
      if (buffer_.submit(std::move(frame)) == SubmitResult::Accepted) {
        buffer_.swap();
        cv_.notify_all();
        return true;
      }
      cv_.wait(lock);
    }
  }

  // Blocks until a frame is available; nullopt once closed and drained.
  std::optional<T> pop() {
    std::unique_lock lock(mutex_);
    claim(consumer_, "consumer");
    for (;;) {
      if (auto frame = buffer_.take()) {
        cv_.notify_all();
        return frame;
      }
      if (closed_) return std::nullopt;
      cv_.wait(lock);
    }
  }

  // Producer signals end of stream; frames already submitted still drain.
  void close() {
    std::lock_guard lock(mutex_);
    closed_ = true;
    cv_.notify_all();
  }

private:
  void claim(std::optional<std::thread::id>& role, const char* name) {
    auto self = std::this_thread::get_id();
    if (!role) role = self;
    else if (*role != self)
      throw std::logic_error(std::string("PingPongChannel: second ") + name + " thread");
  }

  std::mutex mutex_;
  std::condition_variable cv_;
  PingPongBuffer<T> buffer_;
  bool closed_ = false;
  std::optional<std::thread::id> producer_;
  std::optional<std::thread::id> consumer_;
};

}  // namespace platelink
