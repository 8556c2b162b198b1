public class S051 extends Abstract11 {
    public void open() {
        try {
            send("msg0");
            try {
                if (counter > 3) {
                    new S018();
                    new S010();
                } else {
                    send("msg4");
                    send("msg5");
                    new Abstract16();
                }
            } catch (IllegalStateException e) {
                if (counter > 5) {
                    send("msg0");
                    send("msg5");
                    send("msg7");
                } else {
                    send("msg2");
                    new S070();
                    send("msg2");
                }
                if (counter > 0) {
                    update();
                } else {
                    new S094();
                    send("msg4");
                    new S083();
                }
            } catch (TimeoutException e) {
                try {
                    send("msg3");
                    new S094();
                } finally {
                    log("trace");
                    new S073();
                }
            }
            if (counter > 4) {
                new Abstract4();
            }
        } finally {
            send("msg3");
        }
        new S022();
        new S008();
    }

    public void close() {
        send("msg6");
        send("msg7");
    }

    public void start() {
        update();
    }

    public void stop() {
        switch (event) {
            case EV1:
                new S050();
                switch (event) {
                    case EV5:
                        log("trace");
                        if (counter > 1) {
                            send("msg3");
                            new S088();
                        }
                        send("msg0");
                        break;
                    case EV2:
                        send("msg7");
                        update();
                        break;
                    case EV1:
                        if (counter > 5) {
                            new S099();
                        } else {
                            new S095();
                        }
                        update();
                        break;
                }
                break;
            case EV5:
                update();
                new S025();
                break;
            case EV4:
                try {
                    log("trace");
                } finally {
                    send("msg7");
                    if (counter > 4) {
                        new S083();
                        send("msg5");
                        send("msg1");
                    } else {
                        log("trace");
                        log("trace");
                    }
                    send("msg1");
                }
                send("msg2");
                new S018();
                break;
        }
        new S037();
    }

    public void tick() {
        new S031();
        new S054();
        log("trace");
    }

    public void reset() {
        if (counter > 5) {
            if (counter > 5) {
                log("trace");
                send("msg3");
            } else {
                if (counter > 7) {
                    new Abstract10();
                } else {
                    send("msg6");
                    new S060();
                    send("msg0");
                }
                try {
                    new S099();
                } catch (TimeoutException e) {
                    new S034();
                    send("msg3");
                    new S067();
                } catch (IOException e) {
                    new S089();
                    new S086();
                } finally {
                    send("msg7");
                    new S083();
                    new S046();
                }
            }
        }
    }

    public void pause() {
        switch (event) {
            case EV5:
                update();
                log("trace");
                break;
            case EV3:
                new S049();
                log("trace");
                break;
            case EV4:
                log("trace");
                send("msg5");
                new S076();
                break;
        }
    }

    public void resume() {
        log("trace");
        log("trace");
        new S003();
    }

    public void load() {
        new S065();
        send("msg2");
        send("msg1");
    }

    public void save() {
        new S042();
    }
}
