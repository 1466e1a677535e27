// Spawns the Python game server for the live-agreement tests and tears
// it down afterwards. Uses the repo's src/ tree via PYTHONPATH so the
// package does not have to be installed.

import { spawn, type ChildProcess } from "node:child_process";
import { fileURLToPath } from "node:url";
import path from "node:path";

import { SERVER_PORT, SERVER_URL } from "./server.js";

let proc: ChildProcess | undefined;

async function waitUntilReady(): Promise<void> {
  for (let attempt = 0; attempt < 100; attempt++) {
    try {
      const resp = await fetch(`${SERVER_URL}/ppositions?m=2`);
      if (resp.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 100));
  }
  throw new Error(`game server did not become ready on ${SERVER_URL}`);
}

export default async function setup(): Promise<() => void> {
  const here = path.dirname(fileURLToPath(import.meta.url));
  const srcDir = path.resolve(here, "../../src");
  proc = spawn(
    "python3",
    ["-m", "modwythoff", "serve", "--host", "127.0.0.1", "--port", String(SERVER_PORT)],
    {
      stdio: "ignore",
      env: { ...process.env, PYTHONPATH: srcDir },
    },
  );
  await waitUntilReady();
  return () => {
    proc?.kill();
  };
}
