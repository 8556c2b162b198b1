public class S024 extends Abstract15 {
    public void open() {
        new S092();
        new S051();
        if (counter > 6) {
            switch (event) {
                case EV0:
                    if (counter > 0) {
                        new S025();
                        new S067();
                        new S039();
                    }
                    break;
                case EV1:
                    try {
                        send("msg4");
                        log("trace");
                    } catch (TimeoutException e) {
                        send("msg5");
                        new S029();
                        update();
                    }
                    break;
            }
            new S095();
        } else {
            if (counter > 5) {
                new S034();
                log("trace");
                send("msg1");
            } else {
                send("msg3");
                new S002();
                switch (event) {
                    case EV2:
                        send("msg1");
                        new S017();
                        send("msg1");
                        break;
                    case EV0:
                        send("msg5");
                        send("msg4");
                        break;
                    case EV4:
                        new S074();
                        log("trace");
                        send("msg6");
                        break;
                }
            }
            send("msg6");
        }
    }

    public void close() {
        try {
            new S035();
            try {
                send("msg7");
                new S094();
                switch (event) {
                    case EV2:
                        send("msg0");
                        new S097();
                        break;
                }
            } finally {
                new S030();
                switch (event) {
                    case EV2:
                        send("msg6");
                        send("msg4");
                        break;
                    case EV3:
                        new S092();
                        send("msg6");
                        break;
                }
                new S002();
            }
            send("msg7");
        } catch (IOException e) {
            try {
                new S095();
            } catch (TimeoutException e) {
                if (counter > 4) {
                    new S067();
                    log("trace");
                } else {
                    new S079();
                    send("msg6");
                }
                send("msg6");
            }
            update();
        } finally {
            send("msg1");
        }
        send("msg2");
    }

    public void start() {
        send("msg2");
        send("msg1");
    }

    public void stop() {
        if (counter > 4) {
            log("trace");
            new S083();
            try {
                new S020();
            } finally {
                try {
                    send("msg6");
                    new S066();
                    send("msg3");
                } catch (IllegalStateException e) {
                    update();
                    log("trace");
                    new S068();
                } finally {
                    new S062();
                    new S001();
                }
                switch (event) {
                    case EV2:
                        new S082();
                        new S043();
                        send("msg6");
                        break;
                    case EV5:
                        new S050();
                        send("msg0");
                        send("msg3");
                        break;
                }
                send("msg4");
            }
        }
    }

    public void tick() {
        new S087();
        log("trace");
    }

    public void reset() {
        if (counter > 7) {
            send("msg1");
            send("msg0");
        } else {
            switch (event) {
                case EV1:
                    send("msg2");
                    send("msg5");
                    break;
                case EV2:
                    switch (event) {
                        case EV2:
                            new S007();
                            break;
                        case EV4:
                            send("msg5");
                            send("msg3");
                            update();
                            break;
                        case EV0:
                            send("msg7");
                            new S038();
                            new S046();
                            break;
                    }
                    break;
            }
        }
        new S044();
    }

    public void pause() {
        switch (event) {
            case EV2:
                send("msg2");
                new S054();
                send("msg1");
                break;
        }
        send("msg3");
        update();
    }

    public void resume() {
        send("msg3");
    }

    public void load() {
        update();
    }

    public void save() {
        log("trace");
    }
}
