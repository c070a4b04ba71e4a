/** DOM wiring for the chord explorer. */

import { ApiClient, ApiError, defaultBaseUrl } from "./api.js";
import { Player } from "./player.js";
import { renderChord } from "./synth.js";
import {
  ExplorerState,
  availableModes,
  chordLoaded,
  displayedAssignment,
  displayedTdiss,
  initialState,
  keyboardView,
  loadFailed,
  stepId,
  voicesForMode,
} from "./state.js";
import type { ChainEntry, ModeKey } from "./types.js";

const MODES: ModeKey[] = ["1", "2", "3"];

function element<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

const api = new ApiClient(defaultBaseUrl(window.location));
const player = new Player();

let state: ExplorerState = initialState();
let chain: ChainEntry[] = [];

const idInput = element<HTMLInputElement>("chord-id");
const baseNoteInput = element<HTMLInputElement>("base-note");
const swapInput = element<HTMLInputElement>("swap");
const chainInput = element<HTMLInputElement>("chain-position");
const errorLine = element<HTMLElement>("error");
const compositionLine = element<HTMLElement>("composition");
const labelLine = element<HTMLElement>("chord-label");
const assignmentLine = element<HTMLElement>("assignment");
const keyboardBox = element<HTMLElement>("keyboard");
const tdissCells: Record<ModeKey, HTMLElement> = {
  "1": element("tdiss-1"),
  "2": element("tdiss-2"),
  "3": element("tdiss-3"),
};

function render(): void {
  errorLine.textContent = state.error ?? "";
  idInput.value = state.chordId;
  const payload = state.chord;
  if (!payload) return;

  compositionLine.textContent =
    `${payload.id} = ${payload.composition.join(",")}  (notes ${payload.pitches.join(", ")})`;
  labelLine.textContent = payload.label ? `type: ${payload.label}` : "";
  const modes = availableModes(payload);
  for (const mode of MODES) {
    const radio = document.querySelector<HTMLInputElement>(`input[name=mode][value="${mode}"]`);
    if (radio) {
      radio.disabled = !modes.includes(mode);
      radio.checked = mode === state.mode;
    }
    const total = displayedTdiss(state, mode);
    tdissCells[mode].textContent = total === null ? "–" : String(total);
    tdissCells[mode].classList.toggle("current", mode === state.mode);
  }
  assignmentLine.textContent = displayedAssignment(state, state.mode) ?? "–";

  keyboardBox.replaceChildren();
  for (const key of keyboardView(payload, state.mode)) {
    const div = document.createElement("div");
    div.className = "key" + (key.black ? " black" : "");
    if (key.position) {
      const shown = state.swap && key.position !== "center"
        ? (key.position === "left" ? "right" : "left")
        : key.position;
      div.classList.add(`pan-${shown}`);
      div.title = `note ${key.pitch}: ${shown}`;
    }
    keyboardBox.append(div);
  }
}

async function load(id: string): Promise<void> {
  try {
    const payload = await api.chord(id, state.baseNote);
    state = chordLoaded(state, payload);
    const modes = availableModes(payload);
    if (!modes.includes(state.mode)) {
      state = { ...state, mode: modes[modes.length - 1] ?? "1" };
    }
  } catch (error) {
    if (error instanceof DOMException && error.name === "AbortError") return;
    const message = error instanceof ApiError && error.status === 404
      ? `unknown chord id ${id}`
      : String(error instanceof Error ? error.message : error);
    state = loadFailed(state, message);
  }
  render();
}

function currentBuffers(modes: ModeKey[]) {
  const payload = state.chord;
  if (!payload) return [];
  return modes
    .filter((mode) => payload.reports[mode])
    .map((mode) => renderChord(voicesForMode(payload, mode), { swap: state.swap }));
}

function wire(): void {
  element<HTMLElement>("api-url").textContent = api.baseUrl;

  element<HTMLButtonElement>("load").addEventListener("click", () => {
    void load(idInput.value.trim());
  });
  idInput.addEventListener("keydown", (event) => {
    if (event.key === "Enter") void load(idInput.value.trim());
  });
  element<HTMLButtonElement>("prev").addEventListener("click", () => {
    const id = stepId(state.chordId, -1);
    if (id) void load(id);
  });
  element<HTMLButtonElement>("next").addEventListener("click", () => {
    const id = stepId(state.chordId, +1);
    if (id) void load(id);
  });

  chainInput.addEventListener("change", () => {
    void (async () => {
      const position = parseInt(chainInput.value, 10);
      if (!Number.isFinite(position) || position < 1) return;
      try {
        if (chain.length === 0) {
          chain = (await api.chain(3, 55)).chain;
        }
        const entry = chain[position - 1];
        if (!entry) {
          state = loadFailed(state, `chain has only ${chain.length} entries`);
          render();
          return;
        }
        state = { ...state, chainPosition: position };
        await load(entry.id);
      } catch (error) {
        state = loadFailed(state, String(error instanceof Error ? error.message : error));
        render();
      }
    })();
  });

  for (const radio of document.querySelectorAll<HTMLInputElement>("input[name=mode]")) {
    radio.addEventListener("change", () => {
      state = { ...state, mode: radio.value as ModeKey };
      render();
    });
  }
  swapInput.addEventListener("change", () => {
    state = { ...state, swap: swapInput.checked };
    render();  // keyboard colors mirror; playback picks it up without refetch
  });
  baseNoteInput.addEventListener("change", () => {
    const base = parseInt(baseNoteInput.value, 10);
    if (Number.isFinite(base) && base >= 0 && base <= 115) {
      state = { ...state, baseNote: base };
      void load(state.chordId);
    }
  });

  element<HTMLButtonElement>("play").addEventListener("click", () => {
    if (!player.available) {
      state = loadFailed(state, "Web Audio is not available in this browser");
      render();
      return;
    }
    player.playSequence(currentBuffers([state.mode]));
  });
  element<HTMLButtonElement>("compare").addEventListener("click", () => {
    if (!player.available) {
      state = loadFailed(state, "Web Audio is not available in this browser");
      render();
      return;
    }
    // diotic reference first, then the current multi-point rendering
    const second = state.mode === "1" ? "3" : state.mode;
    player.playSequence(currentBuffers(["1", second]));
  });
  element<HTMLButtonElement>("stop").addEventListener("click", () => player.stop());

  void load(state.chordId);
}

wire();
