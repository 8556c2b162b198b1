public class S089 extends Abstract14 {
    public void open() {
        send("msg1");
    }

    public void close() {
        new S068();
        send("msg4");
    }

    public void start() {
        update();
        try {
            send("msg1");
        } catch (IllegalStateException e) {
            send("msg6");
            send("msg6");
            new S088();
        } catch (TimeoutException e) {
            new Abstract2();
            send("msg2");
            send("msg0");
        }
    }

    public void stop() {
        try {
            try {
                log("trace");
                new S060();
                send("msg6");
            } catch (TimeoutException e) {
                log("trace");
            } finally {
                update();
                new S069();
                send("msg2");
            }
        } finally {
            send("msg2");
        }
        switch (event) {
            case EV5:
                send("msg1");
                switch (event) {
                    case EV1:
                        update();
                        break;
                }
                new S073();
                break;
            case EV4:
                update();
                try {
                    try {
                        new S099();
                    } catch (TimeoutException e) {
                        send("msg6");
                        new Abstract6();
                        new S061();
                    }
                    if (counter > 6) {
                        send("msg1");
                    }
                    new S033();
                } finally {
                    switch (event) {
                        case EV0:
                            new S053();
                            new S089();
                            break;
                        case EV1:
                            update();
                            send("msg6");
                            log("trace");
                            break;
                        case EV3:
                            update();
                            log("trace");
                            break;
                    }
                }
                new S051();
                break;
            case EV3:
                send("msg4");
                update();
                break;
        }
    }

    public void tick() {
        if (counter > 7) {
            new S086();
        }
        if (counter > 4) {
            new S028();
        }
        log("trace");
    }

    public void reset() {
        new S030();
    }

    public void pause() {
        new S076();
    }

    public void resume() {
        update();
    }

    public void load() {
        send("msg6");
        if (counter > 2) {
            send("msg2");
            update();
            new S083();
        } else {
            switch (event) {
                case EV2:
                    send("msg6");
                    try {
                        send("msg0");
                    } catch (IllegalStateException e) {
                        send("msg0");
                        send("msg2");
                        new S047();
                    }
                    new S002();
                    break;
                case EV4:
                    new S020();
                    send("msg4");
                    send("msg1");
                    break;
            }
            send("msg0");
            update();
        }
        update();
    }

    public void save() {
        send("msg3");
        new S031();
        if (counter > 7) {
            if (counter > 9) {
                if (counter > 3) {
                    new S047();
                    new S070();
                } else {
                    new S090();
                }
                update();
                new S025();
            }
            try {
                if (counter > 9) {
                    send("msg0");
                    send("msg1");
                    update();
                }
                try {
                    new S097();
                } catch (IOException e) {
                    new S027();
                } catch (TimeoutException e) {
                    new S051();
                    new S018();
                    send("msg6");
                }
                update();
            } finally {
                if (counter > 7) {
                    new S054();
                }
                update();
                new S039();
            }
            send("msg7");
        } else {
            switch (event) {
                case EV3:
                    try {
                        send("msg5");
                        send("msg3");
                    } finally {
                        send("msg6");
                        update();
                    }
                    if (counter > 1) {
                        new S054();
                        send("msg5");
                        new S016();
                    }
                    if (counter > 7) {
                        new S062();
                        send("msg6");
                        send("msg0");
                    } else {
                        update();
                        send("msg5");
                    }
                    break;
                case EV1:
                    if (counter > 2) {
                        log("trace");
                    } else {
                        update();
                        send("msg2");
                        new S096();
                    }
                    break;
                case EV0:
                    send("msg6");
                    send("msg1");
                    break;
            }
            send("msg6");
            if (counter > 5) {
                new S016();
                send("msg4");
                try {
                    new S097();
                    new S098();
                    new S054();
                } catch (TimeoutException e) {
                    send("msg0");
                } catch (IllegalStateException e) {
                    send("msg5");
                    new S025();
                }
            } else {
                send("msg4");
            }
        }
    }
}
