import { ApiError, KaylesApi } from './api'
import { renderAnalysis, renderBanner, renderBoard, renderSubmit } from './render'
import {
  BoardView,
  newBoardView,
  pendingToMove,
  selectVertex,
  syncBoardView,
  winnerBanner,
} from './state'
import { GameSession, VariantInfo } from './types'

const api = new KaylesApi('')
const HUMAN: 'first' = 'first'

let view: BoardView | null = null
let session: GameSession | null = null
let variants: VariantInfo[] = []

function el(id: string): HTMLElement {
  const node = document.getElementById(id)
  if (!node) throw new Error(`missing #${id}`)
  return node
}

function showError(message: string, retry?: () => void): void {
  el('error').innerHTML =
    renderBanner(message) + (retry ? '<button id="retry">Retry</button>' : '')
  if (retry) el('retry').addEventListener('click', retry)
}

async function refreshAnalysis(): Promise<void> {
  if (!view || !session) return
  try {
    const res = await api.outcome(session.variant, view.position)
    el('analysis').innerHTML = renderAnalysis(res.outcome, res.detail)
  } catch {
    el('analysis').innerHTML = ''
  }
}

function redraw(): void {
  if (!view) return
  el('board').innerHTML = renderBoard(view)
  el('controls').innerHTML = renderSubmit(view)
  el('status').innerHTML = renderBanner(winnerBanner(view, HUMAN))
  for (const btn of document.querySelectorAll<HTMLButtonElement>('.vertex')) {
    btn.addEventListener('click', () => {
      if (!view) return
      selectVertex(view, Number(btn.dataset.component), Number(btn.dataset.vertex))
      redraw()
    })
  }
  const submit = document.getElementById('submit')
  if (submit) submit.addEventListener('click', () => void submitMove())
}

async function submitMove(): Promise<void> {
  if (!view || !session) return
  const move = pendingToMove(view)
  try {
    session = await api.playMove(session.id, move)
  } catch (err) {
    if (err instanceof ApiError && err.status === 409) {
      // illegal move: explain inline, keep the selection for editing
      showError(err.message)
      return
    }
    showError('API unreachable', () => void submitMove())
    return
  }
  el('error').innerHTML = ''
  syncBoardView(view, session)
  redraw()
  void refreshAnalysis()
}

async function startGame(): Promise<void> {
  const name = (el('variant') as HTMLSelectElement).value
  const lengths = (el('position') as HTMLInputElement).value
    .split(',')
    .map((s) => Number(s.trim()))
    .filter((n) => Number.isFinite(n) && n > 0)
  const variant = variants.find((v) => v.name === name)
  if (!variant || lengths.length === 0) {
    showError('choose a variant and a comma-separated position')
    return
  }
  try {
    session = await api.createGame(name, lengths, 'second')
  } catch (err) {
    if (err instanceof ApiError) showError(err.message)
    else showError('API unreachable', () => void startGame())
    return
  }
  el('error').innerHTML = ''
  view = newBoardView(variant, session)
  redraw()
  void refreshAnalysis()
}

async function init(): Promise<void> {
  try {
    variants = await api.variants()
  } catch {
    showError('API unreachable', () => void init())
    return
  }
  el('variant').innerHTML = variants
    .map((v) => `<option value="${v.name}">${v.name}</option>`)
    .join('')
  el('start').addEventListener('click', () => void startGame())
}

document.addEventListener('DOMContentLoaded', () => void init())
