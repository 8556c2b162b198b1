public class S023 extends State {
    public void open() {
        send("msg4");
    }

    public void close() {
        new Abstract4();
        update();
        new S024();
    }

    public void start() {
        try {
            try {
                new S030();
                update();
            } catch (IllegalStateException e) {
                new S043();
                send("msg6");
                send("msg7");
            } finally {
                send("msg4");
                switch (event) {
                    case EV2:
                        send("msg3");
                        send("msg1");
                        break;
                    case EV1:
                        new S097();
                        break;
                }
                update();
            }
            send("msg3");
        } catch (IOException e) {
            switch (event) {
                case EV5:
                    new S091();
                    send("msg2");
                    new S032();
                    break;
                case EV0:
                    if (counter > 2) {
                        new S049();
                        send("msg6");
                        send("msg7");
                    }
                    new S025();
                    try {
                        new S066();
                        new S021();
                        new S067();
                    } finally {
                        log("trace");
                        send("msg6");
                    }
                    break;
            }
            try {
                update();
            } catch (IOException e) {
                send("msg3");
            } finally {
                new S036();
                switch (event) {
                    case EV5:
                        new S030();
                        break;
                    case EV1:
                        new S096();
                        send("msg3");
                        break;
                    case EV4:
                        log("trace");
                        new S025();
                        break;
                }
            }
            send("msg1");
        }
        switch (event) {
            case EV2:
                new Abstract11();
                break;
            case EV3:
                send("msg2");
                break;
        }
        new S016();
    }

    public void stop() {
        update();
        new S075();
        try {
            new S064();
            update();
            switch (event) {
                case EV2:
                    log("trace");
                    log("trace");
                    send("msg6");
                    break;
                case EV0:
                    if (counter > 7) {
                        send("msg3");
                        send("msg7");
                    }
                    send("msg6");
                    new S043();
                    break;
                case EV5:
                    send("msg2");
                    new S025();
                    break;
                default:
                    log("trace");
                    try {
                        new S041();
                    } catch (TimeoutException e) {
                        new S027();
                        send("msg6");
                    } catch (IOException e) {
                        send("msg7");
                        send("msg1");
                        send("msg5");
                    }
                    new S023();
                    break;
            }
        } catch (TimeoutException e) {
            switch (event) {
                case EV2:
                    send("msg3");
                    send("msg7");
                    break;
                case EV4:
                    log("trace");
                    send("msg7");
                    send("msg3");
                    break;
            }
            send("msg0");
        } catch (IOException e) {
            log("trace");
            try {
                send("msg2");
            } catch (IOException e) {
                send("msg1");
            } catch (IllegalStateException e) {
                new Abstract7();
            } finally {
                send("msg1");
            }
        } finally {
            new S048();
            update();
        }
    }

    public void tick() {
        new S058();
        new S030();
    }

    public void reset() {
        send("msg1");
    }

    public void pause() {
        send("msg6");
    }

    public void resume() {
        new S056();
    }

    public void load() {
        try {
            send("msg0");
            if (counter > 2) {
                send("msg1");
                try {
                    new S007();
                } catch (TimeoutException e) {
                    send("msg5");
                    new S040();
                } catch (IOException e) {
                    send("msg2");
                    new S004();
                }
                if (counter > 0) {
                    send("msg4");
                    send("msg7");
                    new S021();
                } else {
                    new S056();
                }
            }
            if (counter > 7) {
                send("msg2");
                try {
                    update();
                    log("trace");
                } catch (TimeoutException e) {
                    send("msg7");
                }
            } else {
                new S001();
                new S092();
                new S022();
            }
        } catch (IOException e) {
            new S082();
            update();
        } catch (IllegalStateException e) {
            try {
                try {
                    send("msg2");
                } finally {
                    send("msg0");
                    send("msg0");
                    new S064();
                }
            } catch (IllegalStateException e) {
                send("msg3");
                new S076();
                switch (event) {
                    case EV2:
                        new S011();
                        new S035();
                        break;
                    default:
                        new S082();
                        new S066();
                        new S026();
                        break;
                }
            }
            send("msg2");
        }
    }

    public void save() {
        if (counter > 3) {
            new S011();
        } else {
            try {
                update();
                new S055();
                new S014();
            } catch (IllegalStateException e) {
                send("msg5");
            }
        }
        log("trace");
    }
}
