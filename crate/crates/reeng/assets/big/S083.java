public class S083 extends Abstract16 {
    public void open() {
        new S096();
        send("msg7");
        new S095();
    }

    public void close() {
        new S092();
        new S021();
    }

    public void start() {
        send("msg7");
        send("msg5");
    }

    public void stop() {
        send("msg5");
        try {
            try {
                new S085();
            } catch (IllegalStateException e) {
                send("msg4");
            }
            send("msg7");
            update();
        } finally {
            send("msg0");
            if (counter > 8) {
                if (counter > 0) {
                    send("msg0");
                    new S084();
                    send("msg5");
                } else {
                    log("trace");
                }
                update();
                switch (event) {
                    case EV5:
                        new S094();
                        break;
                    case EV0:
                        update();
                        send("msg7");
                        send("msg0");
                        break;
                }
            }
        }
    }

    public void tick() {
        send("msg4");
        log("trace");
    }

    public void reset() {
        update();
    }

    public void pause() {
        send("msg1");
        send("msg0");
        send("msg7");
    }

    public void resume() {
        log("trace");
        send("msg4");
        send("msg7");
    }

    public void load() {
        if (counter > 9) {
            if (counter > 9) {
                new Abstract20();
            } else {
                send("msg0");
                switch (event) {
                    case EV3:
                        log("trace");
                        send("msg6");
                        send("msg7");
                        break;
                    default:
                        new S040();
                        log("trace");
                        new S059();
                        break;
                }
                new S076();
            }
            update();
        } else {
            send("msg4");
            new S015();
            switch (event) {
                case EV5:
                    try {
                        send("msg6");
                        update();
                    } finally {
                        new S022();
                        send("msg2");
                    }
                    new S039();
                    log("trace");
                    break;
                default:
                    switch (event) {
                        case EV4:
                            new S082();
                            break;
                    }
                    send("msg1");
                    break;
            }
        }
        send("msg6");
        new S069();
    }

    public void save() {
        switch (event) {
            case EV3:
                log("trace");
                new S057();
                switch (event) {
                    case EV5:
                        try {
                            new S096();
                            update();
                        } catch (IllegalStateException e) {
                            log("trace");
                            new S046();
                            new S042();
                        }
                        break;
                }
                break;
            case EV0:
                switch (event) {
                    case EV2:
                        send("msg1");
                        break;
                }
                break;
            case EV4:
                switch (event) {
                    case EV2:
                        send("msg4");
                        try {
                            new S069();
                            send("msg0");
                        } catch (IOException e) {
                            new S070();
                            new Abstract14();
                            send("msg7");
                        } catch (IllegalStateException e) {
                            new S072();
                            send("msg0");
                        }
                        new S035();
                        break;
                    case EV1:
                        send("msg1");
                        break;
                    default:
                        new S023();
                        try {
                            new S099();
                        } catch (IllegalStateException e) {
                            log("trace");
                        } finally {
                            send("msg1");
                            new Abstract17();
                        }
                        send("msg0");
                        break;
                }
                if (counter > 4) {
                    new S019();
                }
                break;
            default:
                send("msg1");
                switch (event) {
                    case EV2:
                        send("msg6");
                        try {
                            new Abstract20();
                            update();
                            new S028();
                        } finally {
                            new S034();
                        }
                        new S042();
                        break;
                    case EV3:
                        log("trace");
                        log("trace");
                        new S097();
                        break;
                }
                break;
        }
        new S043();
    }
}
