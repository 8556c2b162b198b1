public class S099 extends State {
    public void open() {
        new S012();
    }

    public void close() {
        try {
            update();
        } finally {
            log("trace");
            new S073();
        }
        try {
            log("trace");
        } finally {
            log("trace");
            try {
                try {
                    send("msg5");
                    send("msg3");
                    new S067();
                } catch (IOException e) {
                    log("trace");
                }
                new Abstract15();
            } finally {
                new S030();
            }
        }
        if (counter > 1) {
            send("msg7");
            if (counter > 2) {
                send("msg3");
            }
            new S097();
        } else {
            new Abstract16();
        }
    }

    public void start() {
        new S037();
    }

    public void stop() {
        switch (event) {
            case EV1:
                new S018();
                new S063();
                break;
        }
    }

    public void tick() {
        send("msg3");
        send("msg7");
        log("trace");
    }

    public void reset() {
        switch (event) {
            case EV4:
                switch (event) {
                    case EV0:
                        send("msg5");
                        try {
                            update();
                        } catch (TimeoutException e) {
                            log("trace");
                            send("msg0");
                            send("msg2");
                        }
                        break;
                }
                if (counter > 7) {
                    send("msg6");
                    update();
                    send("msg5");
                } else {
                    update();
                }
                send("msg3");
                break;
            default:
                try {
                    if (counter > 2) {
                        new S031();
                        new S024();
                    } else {
                        send("msg2");
                        send("msg3");
                        send("msg3");
                    }
                } catch (IOException e) {
                    if (counter > 3) {
                        new Abstract0();
                        send("msg1");
                    } else {
                        log("trace");
                        send("msg1");
                        log("trace");
                    }
                } finally {
                    new S064();
                    try {
                        send("msg1");
                        new S089();
                        send("msg3");
                    } catch (IOException e) {
                        new S016();
                        send("msg5");
                        update();
                    } catch (IllegalStateException e) {
                        send("msg1");
                    }
                    if (counter > 0) {
                        update();
                        send("msg3");
                        send("msg2");
                    } else {
                        update();
                    }
                }
                break;
        }
    }

    public void pause() {
        new S035();
        send("msg7");
    }

    public void resume() {
        send("msg0");
        send("msg7");
        new S083();
    }

    public void load() {
        log("trace");
        update();
    }

    public void save() {
        switch (event) {
            case EV3:
                new S082();
                break;
        }
        log("trace");
        new S001();
    }
}
