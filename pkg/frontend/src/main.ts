// Explorer bootstrap: wires controls, canvas interaction, fetching and the
// render loop together. The server computes layouts, weights, labels and
// colors; this file only presents them.

import { ApiError, fetchGraph, fetchStatement, fetchTopCommenters } from "./api";
import type { Camera, Viewport } from "./camera";
import { fitCamera, pan, zoomAt } from "./camera";
import {
  hidePanel,
  renderEmptyNotice,
  renderErrorPanel,
  renderStaleNotice,
  renderStatementPanel,
} from "./panel";
import { render } from "./renderer";
import type { Scene } from "./scene";
import { buildScene, hitTest } from "./scene";
import {
  back,
  canBack,
  canForward,
  current,
  forward,
  initialHistory,
  visit,
  type History,
} from "./state";
import type { ViewParams, ViewPayload } from "./types";
import { paramProblems, PayloadError } from "./validate";

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

const canvas = el<HTMLCanvasElement>("graph");
const panel = el<HTMLElement>("panel");
const status = el<HTMLElement>("status");
const legend = el<HTMLElement>("legend");

let history: History = initialHistory();
let payload: ViewPayload | null = null;
let camera: Camera = { x: 0, y: 0, scale: 1 };
let selection: string | null = null;
let scene: Scene | null = null;
let dirty = true;

function viewport(): Viewport {
  return { width: canvas.clientWidth, height: canvas.clientHeight };
}

function setStatus(text: string, isError = false): void {
  status.textContent = text;
  status.classList.toggle("error", isError);
}

function markDirty(): void {
  dirty = true;
}

function frame(): void {
  if (dirty && payload) {
    const vp = viewport();
    const ratio = window.devicePixelRatio || 1;
    if (canvas.width !== vp.width * ratio || canvas.height !== vp.height * ratio) {
      canvas.width = vp.width * ratio;
      canvas.height = vp.height * ratio;
    }
    const ctx = canvas.getContext("2d");
    if (ctx) {
      ctx.setTransform(ratio, 0, 0, ratio, 0, 0);
      scene = buildScene(payload, camera, vp, selection);
      render(ctx, scene, vp.width, vp.height);
    }
    dirty = false;
  }
  requestAnimationFrame(frame);
}

function syncNavButtons(): void {
  el<HTMLButtonElement>("nav-back").disabled = !canBack(history);
  el<HTMLButtonElement>("nav-forward").disabled = !canForward(history);
}

function syncControlVisibility(params: ViewParams): void {
  for (const tab of document.querySelectorAll<HTMLButtonElement>(".tab")) {
    tab.classList.toggle("active", tab.dataset.kind === params.kind);
  }
  el("ctl-sample").classList.toggle("hidden", params.kind !== "macro");
  el("ctl-role").classList.toggle("hidden", params.kind === "micro");
  el("ctl-query").classList.toggle("hidden", params.kind !== "micro");
  el("ctl-user-a").classList.toggle("hidden", params.kind !== "overlay");
  el("ctl-user-b").classList.toggle("hidden", params.kind !== "overlay");
  legend.classList.toggle("hidden", params.kind !== "overlay");
}

function readParams(): ViewParams {
  const active = document.querySelector<HTMLButtonElement>(".tab.active");
  return {
    kind: (active?.dataset.kind ?? "macro") as ViewParams["kind"],
    role: el<HTMLSelectElement>("role").value as "cause" | "effect",
    sample: Number(el<HTMLInputElement>("sample").value),
    seed: Number(el<HTMLInputElement>("seed").value),
    causeQuery: el<HTMLInputElement>("query").value,
    userA: el<HTMLSelectElement>("user-a").value,
    userB: el<HTMLSelectElement>("user-b").value,
    minWeight: Number(el<HTMLInputElement>("min-weight").value),
  };
}

function writeParams(params: ViewParams): void {
  el<HTMLSelectElement>("role").value = params.role;
  el<HTMLInputElement>("sample").value = String(params.sample);
  el<HTMLElement>("sample-value").textContent = params.sample.toFixed(2);
  el<HTMLInputElement>("seed").value = String(params.seed);
  el<HTMLInputElement>("query").value = params.causeQuery;
  el<HTMLSelectElement>("user-a").value = params.userA;
  el<HTMLSelectElement>("user-b").value = params.userB;
  el<HTMLInputElement>("min-weight").value = String(params.minWeight);
  syncControlVisibility(params);
}

async function loadView(params: ViewParams): Promise<void> {
  const problems = paramProblems(params);
  if (problems.length > 0) {
    setStatus(problems.join("; "), true);
    return;
  }
  setStatus("loading…");
  selection = null;
  hidePanel(panel);
  try {
    payload = await fetchGraph(params);
  } catch (err) {
    if (err instanceof DOMException && err.name === "AbortError") return;
    payload = null;
    if (err instanceof ApiError) {
      setStatus(`${err.reason}: ${err.message}`, true);
    } else if (err instanceof PayloadError) {
      renderErrorPanel(panel, `Malformed server payload: ${err.message}`);
      setStatus("malformed payload", true);
    } else {
      setStatus(String(err), true);
    }
    return;
  }
  camera = fitCamera(payload.nodes, viewport());
  if (payload.nodes.length === 0) {
    renderEmptyNotice(panel);
    setStatus("0 nodes");
  } else {
    setStatus(
      `${payload.meta.nodeCount} nodes, ${payload.meta.edgeCount} edges`,
    );
  }
  markDirty();
}

async function navigate(params: ViewParams, record = true): Promise<void> {
  if (record) history = visit(history, params);
  writeParams(params);
  syncNavButtons();
  await loadView(params);
}

async function drillDown(key: string): Promise<void> {
  selection = key;
  markDirty();
  try {
    const detail = await fetchStatement(key);
    renderStatementPanel(panel, key, detail);
  } catch (err) {
    if (err instanceof ApiError && err.status === 404) {
      renderStaleNotice(panel);
    } else {
      renderErrorPanel(panel, String(err));
    }
  }
}

function wireCanvas(): void {
  let dragging = false;
  let moved = false;
  let lastX = 0;
  let lastY = 0;

  canvas.addEventListener("pointerdown", (event) => {
    dragging = true;
    moved = false;
    lastX = event.offsetX;
    lastY = event.offsetY;
    canvas.classList.add("dragging");
    canvas.setPointerCapture(event.pointerId);
  });

  canvas.addEventListener("pointermove", (event) => {
    if (!dragging) return;
    const dx = event.offsetX - lastX;
    const dy = event.offsetY - lastY;
    if (Math.abs(dx) + Math.abs(dy) > 2) moved = true;
    camera = pan(camera, dx, dy);
    lastX = event.offsetX;
    lastY = event.offsetY;
    markDirty();
  });

  canvas.addEventListener("pointerup", (event) => {
    dragging = false;
    canvas.classList.remove("dragging");
    if (!moved && scene) {
      const key = hitTest(scene, event.offsetX, event.offsetY);
      if (key !== null) {
        void drillDown(key);
      } else {
        selection = null;
        hidePanel(panel);
        markDirty();
      }
    }
  });

  canvas.addEventListener("wheel", (event) => {
    event.preventDefault();
    const factor = Math.exp(-event.deltaY * 0.0015);
    camera = zoomAt(camera, factor, event.offsetX, event.offsetY, viewport());
    markDirty();
  });

  window.addEventListener("resize", markDirty);
}

function wireControls(): void {
  for (const tab of document.querySelectorAll<HTMLButtonElement>(".tab")) {
    tab.addEventListener("click", () => {
      const params = { ...current(history), kind: tab.dataset.kind } as ViewParams;
      void navigate(params);
    });
  }
  el<HTMLInputElement>("sample").addEventListener("input", () => {
    el<HTMLElement>("sample-value").textContent = Number(
      el<HTMLInputElement>("sample").value,
    ).toFixed(2);
  });
  el<HTMLButtonElement>("apply").addEventListener("click", () => {
    void navigate(readParams());
  });
  el<HTMLInputElement>("query").addEventListener("keydown", (event) => {
    if (event.key === "Enter") void navigate(readParams());
  });
  el<HTMLButtonElement>("nav-back").addEventListener("click", () => {
    history = back(history);
    syncNavButtons();
    writeParams(current(history));
    void loadView(current(history));
  });
  el<HTMLButtonElement>("nav-forward").addEventListener("click", () => {
    history = forward(history);
    syncNavButtons();
    writeParams(current(history));
    void loadView(current(history));
  });
}

async function populateUserPickers(): Promise<void> {
  try {
    const top = await fetchTopCommenters(12);
    for (const [selectId, fallback] of [
      ["user-a", 0],
      ["user-b", 1],
    ] as const) {
      const select = el<HTMLSelectElement>(selectId);
      select.replaceChildren();
      for (const commenter of top) {
        const option = document.createElement("option");
        option.value = commenter;
        option.textContent = commenter;
        select.appendChild(option);
      }
      if (top.length > fallback) select.value = top[fallback];
    }
  } catch {
    // overlay stays usable via manual refresh; other views unaffected
  }
}

export async function boot(): Promise<void> {
  wireCanvas();
  wireControls();
  await populateUserPickers();
  const params = { ...current(history) };
  const select = el<HTMLSelectElement>("user-a");
  if (select.options.length >= 2) {
    params.userA = select.options[0].value;
    params.userB = select.options[1].value;
    history = initialHistory(params);
  }
  writeParams(params);
  syncNavButtons();
  requestAnimationFrame(frame);
  await loadView(params);
}

if (!("__CAUSEMAP_TEST__" in window)) {
  void boot();
}
